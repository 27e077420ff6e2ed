#include "ceq/curved.hpp"

#include <stdexcept>

namespace ceq {
namespace {

SymbolPolynomial xi_square(int n, int i) {
  Monomial m = Monomial::unit(n);
  m.xi[i] = 2;
  return SymbolPolynomial::monomial(n, m, Coefficient::one());
}

}  // namespace

SymbolPolynomial laplace_beltrami_symbol(const MetricJet& m) {
  const int n = m.sig.n();
  const int r = m.order();
  if (r < 1) throw std::invalid_argument("laplace_beltrami_symbol: need jet order >= 1");
  const TaylorJet& f = m.conformal_factor;
  // |g|^{1/2} = F^{n/2}; g^{jj} = eta_j / F.
  const TaylorJet root_det = f.pow(Rational(n, 2));
  const TaylorJet root_det_inv = f.pow(Rational(-n, 2));
  const TaylorJet finv = f.inverse();
  SymbolPolynomial sym(n);
  for (int j = 0; j < n; ++j) {
    sym += (finv.body() * xi_square(n, j)).scaled(m.sig.metric(j));
    // first-order coefficient eta_j F^{-n/2} d_j(F^{n/2 - 1})
    const TaylorJet coeff =
        root_det_inv * (root_det * finv).derivative(j);
    sym += (coeff.body() * SymbolPolynomial::variable(n, VarKind::Xi, j)).scaled(m.sig.metric(j));
  }
  return sym;
}

OperatorSymbol quantum_hamiltonian(const SymbolPolynomial& p, const MetricJet& m,
                                   const Weights& w) {
  if (w.lambda + w.mu != Rational(1))
    throw std::invalid_argument("quantum_hamiltonian: requires lambda + mu = 1");
  if (p.n() != m.sig.n())
    throw std::invalid_argument("quantum_hamiltonian: mismatched dimension n");
  const int n = m.sig.n();
  const int r = m.order();

  const OperatorSymbol quantized = quantize(p, w, m.sig).output;

  // |Vol_g|^lambda = F^{n lambda / 2} as a multiplication operator.
  const Rational half_n(n, 2);
  const SymbolPolynomial vol_lambda = m.conformal_factor.pow(half_n * w.lambda).body();
  const SymbolPolynomial vol_mu_inv = m.conformal_factor.pow(-half_n * w.mu).body();

  SymbolPolynomial conjugated =
      compose(quantized, OperatorSymbol(vol_lambda)).body().truncate_x_degree(r);
  conjugated = (vol_mu_inv * conjugated).truncate_x_degree(r);
  return OperatorSymbol(conjugated);
}

GeodesicReport geodesic_flow_check(const MetricJet& m) {
  const int n = m.sig.n();
  if (n < 2) throw std::invalid_argument("geodesic_flow_check: need n >= 2");
  if (m.order() < 4) throw std::invalid_argument("geodesic_flow_check: need jet order >= 4");

  // H = g^{ij} xi_i xi_j with the curved inverse metric F^{-1} eta.
  const TaylorJet finv = m.conformal_factor.inverse();
  SymbolPolynomial h(n);
  for (int i = 0; i < n; ++i) h += (finv.body() * xi_square(n, i)).scaled(m.sig.metric(i));

  const Weights half(Rational(1, 2), Rational(1, 2));
  const OperatorSymbol hat = quantum_hamiltonian(h, m, half);

  GeodesicReport report(n);
  report.scalar_curvature = curvature_at_origin(m);
  report.actual = hat.body().origin_part();

  // -ħ^2 (Lap_g - n^2/(4(n-1)(n+2)) R_g), origin coefficients.
  const Rational c = Rational(n) * Rational(n) /
                     (Rational(4) * Rational(n - 1) * Rational(n + 2));
  SymbolPolynomial expected = laplace_beltrami_symbol(m).origin_part();
  expected.add_term(Monomial::unit(n), Coefficient(-c * report.scalar_curvature));
  report.expected = expected.scaled(Coefficient(GaussianRational(Rational(-1)), 2));  // * (-ħ^2)

  report.pass = (report.actual == report.expected);
  if (!report.pass) {
    SymbolPolynomial difference = report.actual - report.expected;
    for (const auto& [mono, coeff] : difference.terms())
      report.diffs.push_back(
          {mono, report.actual.coefficient(mono), report.expected.coefficient(mono)});
  }
  return report;
}

}  // namespace ceq
