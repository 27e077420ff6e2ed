#include <doctest.h>

#include "ceq/curved.hpp"
#include "ceq/sampling.hpp"

using namespace ceq;

namespace {

SymbolPolynomial xi(int n, int i) { return SymbolPolynomial::variable(n, VarKind::Xi, i); }
SymbolPolynomial one(int n) { return SymbolPolynomial::constant(n, Coefficient::one()); }

// Independent curvature oracle for g = e^{2 phi} eta:
//   R = e^{-2 phi} ( -2(n-1) Lap_eta phi - (n-1)(n-2) |grad phi|^2_eta ),
// evaluated through the exact log-jet phi = (1/2) log F.
Rational conformal_curvature_oracle(const MetricJet& m) {
  const int n = m.sig.n();
  const int r = m.order();
  // phi = 1/2 log F: log(1+u) = sum (-1)^{j+1} u^j / j
  SymbolPolynomial u = m.conformal_factor.body();
  u.add_term(Monomial::unit(n), Coefficient(Rational(-1)));
  SymbolPolynomial log_f(n);
  SymbolPolynomial power = one(n);
  for (int j = 1; j <= r; ++j) {
    power = (power * u).truncate_x_degree(r);
    if (power.is_zero()) break;
    log_f += power.scaled(Rational(j % 2 == 1 ? 1 : -1, j));
  }
  const TaylorJet phi(log_f.scaled(Rational(1, 2)), r);

  TaylorJet lap_phi(n, r - 2);
  TaylorJet grad_sq(n, r - 2);
  for (int i = 0; i < n; ++i) {
    lap_phi += phi.derivative(i).derivative(i).scaled(m.sig.metric(i));
    TaylorJet d = phi.derivative(i);
    d = TaylorJet(d.body(), r - 2);
    grad_sq += (d * d).scaled(m.sig.metric(i));
  }
  const Rational bulk = Rational(-2) * Rational(n - 1) * lap_phi.value_at_origin() -
                        Rational(n - 1) * Rational(n - 2) * grad_sq.value_at_origin();
  // e^{-2 phi(0)} = 1/F(0) = 1
  return bulk;
}

}  // namespace

TEST_CASE("jet arithmetic") {
  const int n = 2;
  // inv(1 + x^1) = 1 - x^1 + (x^1)^2 at order 2
  TaylorJet f = TaylorJet::constant(n, 2, Rational(1));
  f.set_coefficient({1, 0}, Rational(1));
  const TaylorJet inv = f.inverse();
  CHECK(inv.coefficient({0, 0}) == Rational(1));
  CHECK(inv.coefficient({1, 0}) == Rational(-1));
  CHECK(inv.coefficient({2, 0}) == Rational(1));
  CHECK((f * inv) == TaylorJet::constant(n, 2, Rational(1)));

  // pow(1 + x^1, 1/2) = 1 + x/2 - x^2/8
  const TaylorJet root = f.pow(Rational(1, 2));
  CHECK(root.coefficient({1, 0}) == Rational(1, 2));
  CHECK(root.coefficient({2, 0}) == Rational(-1, 8));
  CHECK(root * root == f);

  CHECK_THROWS_AS(TaylorJet(n, 2).inverse(), std::invalid_argument);
  CHECK_THROWS_AS(f.scaled(Rational(2)).pow(Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(TaylorJet(xi(n, 0), 2), std::invalid_argument);
}

TEST_CASE("curvature of the flat metric vanishes") {
  for (const Signature sig : {Signature(2, 0), Signature(1, 1), Signature(3, 0)}) {
    const MetricJet m(TaylorJet::constant(sig.n(), 4, Rational(1)), sig);
    CHECK(curvature_at_origin(m) == Rational(0));
  }
}

TEST_CASE("curvature agrees with the conformal-factor oracle") {
  for (const Signature sig : {Signature(2, 0), Signature(3, 0), Signature(2, 1), Signature(1, 1)}) {
    Sampler sampler(43);
    for (int c = 0; c < 6; ++c) {
      const MetricJet m(sampler.random_unit_jet(sig.n(), 4), sig);
      CHECK(curvature_at_origin(m) == conformal_curvature_oracle(m));
    }
  }
  // explicit value: F = 1 + sum (x^i)^2 at n = 3 Euclidean
  const int n = 3;
  TaylorJet f = TaylorJet::constant(n, 2, Rational(1));
  f.set_coefficient({2, 0, 0}, Rational(1));
  f.set_coefficient({0, 2, 0}, Rational(1));
  f.set_coefficient({0, 0, 2}, Rational(1));
  const MetricJet m(f, Signature(3, 0));
  CHECK(curvature_at_origin(m) == conformal_curvature_oracle(m));
  // Lap phi at origin: phi = 1/2 log F -> second derivatives of F/2; R = -2(n-1) Lap phi
  CHECK(curvature_at_origin(m) == Rational(-2) * Rational(n - 1) * Rational(3));
}

TEST_CASE("curvature scaling under x -> x/c") {
  // Replacing F by F(x/c) scales second derivatives (hence the origin
  // curvature) by 1/c^2.
  const Signature sig(2, 0);
  Sampler sampler(47);
  const Rational c(3, 2);
  const TaylorJet f = sampler.random_unit_jet(2, 4);
  TaylorJet scaled_f(2, 4);
  for (const auto& [mono, coeff] : f.body().terms()) {
    Rational factor(1);
    for (int j = 0; j < mono.x_degree(); ++j) factor /= c;
    scaled_f.set_coefficient(mono.x, coeff.at_hpow(0).re * factor);
  }
  const Rational r1 = curvature_at_origin(MetricJet(f, sig));
  const Rational r2 = curvature_at_origin(MetricJet(scaled_f, sig));
  CHECK(r2 == r1 / (c * c));
}

TEST_CASE("quantum hamiltonian with trivial conjugation") {
  const Signature sig(3, 0);
  const int n = 3;
  const MetricJet flat(TaylorJet::constant(n, 4, Rational(1)), sig);
  const Weights half(Rational(1, 2), Rational(1, 2));
  CHECK(quantum_hamiltonian(xi(n, 0), flat, half).body() ==
        xi(n, 0).scaled(Coefficient(GaussianRational::i(), 1)));
  // flat H = g^{ij} xi_i xi_j quantizes to -hbar^2 (flat Laplacian symbol)
  SymbolPolynomial h(n);
  for (int i = 0; i < n; ++i) h += (xi(n, i) * xi(n, i)).scaled(sig.metric(i));
  CHECK(quantum_hamiltonian(h, flat, half).body() ==
        h.scaled(Coefficient(GaussianRational(Rational(-1)), 2)));
  CHECK_THROWS_AS(quantum_hamiltonian(h, flat, Weights(Rational(1, 3), Rational(1, 3))),
                  std::invalid_argument);
}

TEST_CASE("conjugation by volume powers is invertible modulo truncation") {
  const Signature sig(2, 0);
  const int n = 2;
  Sampler sampler(53);
  const MetricJet m(sampler.random_unit_jet(n, 4), sig);
  const int r = m.order();
  const Rational e(3, 4);
  const SymbolPolynomial up = m.conformal_factor.pow(e).body();
  const SymbolPolynomial down = m.conformal_factor.pow(-e).body();
  const auto a = sampler.random_symbol(n, 2, 2, 4);
  const OperatorSymbol conj1(
      (down * compose(OperatorSymbol(a), OperatorSymbol(up)).body()).truncate_x_degree(r));
  const OperatorSymbol conj2(
      (up * compose(conj1, OperatorSymbol(down)).body()).truncate_x_degree(r));
  // the double conjugation returns A up to terms killed by the truncation
  CHECK(conj2.body().truncate_x_degree(r - a.xi_degree()) ==
        a.truncate_x_degree(r - a.xi_degree()));
}

TEST_CASE("geodesic flow check on the flat metric") {
  for (const Signature sig : {Signature(2, 0), Signature(3, 0)}) {
    const MetricJet m(TaylorJet::constant(sig.n(), 4, Rational(1)), sig);
    const auto report = geodesic_flow_check(m);
    CHECK(report.pass);
    CHECK(report.scalar_curvature == Rational(0));
    SymbolPolynomial lap(sig.n());
    for (int i = 0; i < sig.n(); ++i)
      lap += (xi(sig.n(), i) * xi(sig.n(), i)).scaled(sig.metric(i));
    CHECK(report.actual == lap.scaled(Coefficient(GaussianRational(Rational(-1)), 2)));
  }
}

TEST_CASE("geodesic flow check on an indefinite signature") {
  // the construction is signature-generic: a Lorentzian surface and a
  // (2,1) space pass the same exact comparison
  for (const Signature sig : {Signature(1, 1), Signature(2, 1)}) {
    Sampler sampler(61);
    for (int c = 0; c < 2; ++c) {
      const MetricJet m(sampler.random_unit_jet(sig.n(), 4), sig);
      CHECK(geodesic_flow_check(m).pass);
    }
  }
}

TEST_CASE("geodesic flow check on random conformally flat jets") {
  for (const Signature sig : {Signature(2, 0), Signature(3, 0)}) {
    Sampler sampler(59);
    for (int c = 0; c < 4; ++c) {
      const MetricJet m(sampler.random_unit_jet(sig.n(), 4), sig);
      const auto report = geodesic_flow_check(m);
      CHECK_MESSAGE(report.pass, "n=", sig.n(), " case ", c);
    }
    // zero linear part isolates the curvature correction at the origin
    const MetricJet flat1(sampler.random_unit_jet(sig.n(), 4, /*zero_linear_part=*/true), sig);
    const auto report = geodesic_flow_check(flat1);
    CHECK(report.pass);
    // with d F(0) = 0 the first-order coefficients vanish at the origin
    for (const auto& [mono, coeff] : report.actual.terms()) CHECK(mono.xi_degree() != 1);
  }
  CHECK_THROWS_AS(
      geodesic_flow_check(MetricJet(TaylorJet::constant(2, 3, Rational(1)), Signature(2, 0))),
      std::invalid_argument);
}
