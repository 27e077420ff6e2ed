// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all tolerances are exact equalities here) and prints one PASS/FAIL line
// per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ceq/curved.hpp"
#include "ceq/harmonic.hpp"
#include "ceq/invariants.hpp"
#include "ceq/lie.hpp"
#include "ceq/quantizer.hpp"
#include "ceq/resonance.hpp"
#include "ceq/sampling.hpp"
#include "ceq/star_product.hpp"

using namespace ceq;

namespace {

using Clock = std::chrono::steady_clock;

SymbolPolynomial xi(int n, int i) { return SymbolPolynomial::variable(n, VarKind::Xi, i); }

SymbolPolynomial hbar_coefficient(const SymbolPolynomial& p, int order) {
  SymbolPolynomial out(p.n());
  for (const auto& [m, c] : p.terms())
    out.add_term(m, Coefficient(c.at_hpow(order) * i_power(-order)));
  return out;
}

std::vector<SymbolPolynomial> spanning_symbols(int n, int max_xi, int max_x) {
  std::vector<SymbolPolynomial> out;
  for (const auto& xe : multi_indices(n, max_x))
    for (const auto& xie : multi_indices(n, max_xi))
      out.push_back(SymbolPolynomial::monomial(n, Monomial(xe, xie), Coefficient::one()));
  return out;
}

bool is_resonant_order2(const Signature& sig, const Rational& delta) {
  for (const auto& e : enumerate_sigma(sig, 2))
    if (e.delta == delta) return true;
  return false;
}

// ---------------------------------------------------------------------------

bool criterion_second_order(std::string& detail) {
  const auto t0 = Clock::now();
  const std::vector<Weights> candidates = {
      {Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(1, 3)},
      {Rational(0), Rational(1, 7)},    {Rational(1, 4), Rational(-1, 12)},
      {Rational(-1, 2), Rational(1, 7)},{Rational(2, 5), Rational(2, 5)},
      {Rational(1, 5), Rational(18, 35)},{Rational(-1, 3), Rational(-2, 3)},
      {Rational(1, 6), Rational(1, 2)}, {Rational(3, 7), Rational(2, 7)},
      {Rational(1, 9), Rational(4, 9)}, {Rational(0), Rational(-3, 7)},
  };
  int checked = 0;
  for (int n : {2, 3, 4, 5}) {
    const Signature sig(n, 0);
    const auto spanning = spanning_symbols(n, 2, 2);
    int used = 0;
    for (const auto& w : candidates) {
      if (used == 9) break;
      if (is_resonant_order2(sig, w.delta())) continue;
      ++used;
      const EndoOperator closed = second_order_map(sig, w);
      for (const auto& mono : spanning) {
        if (quantize_tilde(mono, w, sig).output.body() != endo_apply(closed, mono)) {
          detail = "mismatch at n = " + std::to_string(n);
          return false;
        }
        ++checked;
      }
    }
    if (used < 9) {
      detail = "only " + std::to_string(used) + " non-resonant pairs at n = " + std::to_string(n);
      return false;
    }
  }
  const auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream os;
  os << checked << " exact matches, " << secs << " s";
  detail = os.str();
  return secs < 5.0;
}

bool criterion_half_density(std::string& detail) {
  int checked = 0;
  for (int n : {2, 3, 4}) {
    const Signature sig(n, 0);
    const Weights half(Rational(1, 2), Rational(1, 2));
    const EndoOperator d = invariant_operator(InvariantName::D, sig);
    EndoOperator expected = EndoOperator::identity(n);
    expected += d.scaled(Coefficient(GaussianRational(Rational(0), Rational(1, 2)), 1));
    const Coefficient minus_h2_8(GaussianRational(Rational(-1, 8)), 2);
    expected += invariant_operator(InvariantName::Delta0, sig)
                    .scaled(minus_h2_8 *
                            Coefficient(Rational(n) / (Rational(n + 1) * Rational(n + 2))));
    expected += endo_compose(d, d).scaled(minus_h2_8 * Coefficient(Rational(n, n + 1)));
    for (const auto& mono : spanning_symbols(n, 2, 2)) {
      if (quantize_graded(mono, half, sig) != endo_apply(expected, mono)) {
        detail = "mismatch at n = " + std::to_string(n);
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " exact matches";
  return true;
}

bool criterion_equivariance(std::string& detail) {
  const auto t0 = Clock::now();
  const Weights w(Rational(2, 7), Rational(3, 5));
  int checked = 0;
  for (int n : {2, 3}) {
    const Signature sig(n, 0);
    for (const auto& e : enumerate_sigma(sig, 5))
      if (e.delta == w.delta()) {
        detail = "chosen shift is resonant";
        return false;
      }
    const ConformalBasis basis = conformal_generators(sig);
    Sampler sampler(2026);
    for (int c = 0; c < 50; ++c) {
      const auto p = sampler.random_symbol(n, 5, 3, 5);
      const OperatorSymbol qp = quantize_tilde(p, w, sig).output;
      for (int g = 0; g < basis.size(); ++g) {
        const SymbolPolynomial lhs = operator_lie(basis.generators[g], qp, w).body();
        const SymbolPolynomial rhs =
            quantize_tilde(symbol_lie(basis.generators[g], p, w.delta()), w, sig).output.body();
        if (lhs != rhs) {
          detail = "residual at generator " + basis.names[g] + ", n = " + std::to_string(n);
          return false;
        }
        ++checked;
      }
    }
  }
  const auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream os;
  os << checked << " zero residuals, " << secs << " s";
  detail = os.str();
  return secs < 60.0;
}

bool criterion_resonances(std::string& detail) {
  for (int n = 2; n <= 8; ++n) {
    const Signature sig(n, 0);
    std::set<Rational> values;
    for (const auto& e : enumerate_sigma(sig, 2)) values.insert(e.delta);
    const std::set<Rational> expected = {Rational(2, n), Rational(n + 2, 2 * n), Rational(1),
                                         Rational(n + 1, n), Rational(n + 2, n)};
    if (values != expected) {
      detail = "value set mismatch at n = " + std::to_string(n);
      return false;
    }
  }
  if (delta_value(4, 3, 2, 0, Signature(2, 0)) != Rational(0)) {
    detail = "delta_{4,3;2,0} != 0 at n = 2";
    return false;
  }
  for (int n : {2, 3, 4}) {
    for (const auto& e : enumerate_sigma(Signature(n, 0), 10))
      if (e.in_sigma0 && !(e.delta > Rational(0))) {
        detail = "non-positive Sigma_0 entry at n = " + std::to_string(n);
        return false;
      }
  }
  detail = "second-order resonance list reproduced for n = 2..8; Sigma_0 > 0 for k <= 10";
  return true;
}

bool criterion_delta_zero(std::string& detail) {
  const auto report = probe_critical(Signature(2, 0), Weights(Rational(1, 3), Rational(1, 3)), 6);
  int critical = 0;
  for (const auto& cell : report.cells)
    if (cell.status == ProbeStatus::Critical) ++critical;
  detail = std::to_string(report.cells.size()) + " cells probed, " + std::to_string(critical) +
           " critical";
  return critical == 0;
}

bool criterion_casimir(std::string& detail) {
  for (int n : {2, 3}) {
    const Signature sig(n, 0);
    const Rational delta(2, 7);
    const Weights w(Rational(3, 8), Rational(3, 8) + delta);
    if (casimir_symbols_basis_sum(sig, delta) != casimir_symbols(sig, delta)) {
      detail = "symbol Casimir dual-basis sum mismatch at n = " + std::to_string(n);
      return false;
    }
    if (casimir_operators_basis_sum(sig, w) != casimir_operators(sig, w)) {
      detail = "operator Casimir dual-basis sum mismatch at n = " + std::to_string(n);
      return false;
    }
    // alternative expression: C_delta = -C_sl2 - (E - n delta)^2 - n(1 - n/2)
    const EndoOperator e_shift = invariant_operator(InvariantName::E, sig) -
                                 EndoOperator::identity(n).scaled(Rational(n) * delta);
    const EndoOperator alternative =
        -invariant_operator(InvariantName::CSl2, sig) - endo_compose(e_shift, e_shift) -
        EndoOperator::identity(n).scaled(Rational(n) * (Rational(1) - Rational(n, 2)));
    if (casimir_symbols(sig, delta) != alternative) {
      detail = "alternative Casimir expression fails at n = " + std::to_string(n);
      return false;
    }
    // eigenvalues on the (k,s) components of degree <= 5 random symbols
    Sampler sampler(61);
    const EndoOperator cdelta = casimir_symbols(sig, delta);
    const EndoOperator r0 = invariant_operator(InvariantName::R0, sig);
    for (int c = 0; c < 10; ++c) {
      const auto p = sampler.random_symbol(n, 5, 2, 6);
      for (const auto& comp : harmonic_decompose(p, sig)) {
        if (endo_apply(cdelta, comp.part) !=
            comp.part.scaled(gamma_eigenvalue(comp.k, comp.s, sig, delta))) {
          detail = "C_delta eigenvalue mismatch";
          return false;
        }
        if (endo_apply(r0, comp.part) !=
            comp.part.scaled(rho_eigenvalue(comp.k, comp.s, sig))) {
          detail = "R0 eigenvalue mismatch";
          return false;
        }
      }
    }
  }
  detail = "closed forms = dual-basis sums (exact endomorphisms); spectra match";
  return true;
}

bool criterion_commutant(std::string& detail) {
  for (int n : {2, 3}) {
    const Signature sig(n, 0);
    const auto op = [&](InvariantName name) { return invariant_operator(name, sig); };
    const EndoOperator r = op(InvariantName::R), e = op(InvariantName::E);
    const EndoOperator t = op(InvariantName::T), g = op(InvariantName::G);
    const EndoOperator d = op(InvariantName::D), lap = op(InvariantName::Delta);
    const bool sl2_ok = endo_commutator(e, r) == r.scaled(Rational(2)) &&
                        endo_commutator(e, t) == t.scaled(Rational(-2)) &&
                        endo_commutator(t, r) == e.scaled(Rational(4)) &&
                        endo_commutator(d, r) == g.scaled(Rational(2)) &&
                        endo_commutator(r, g) == EndoOperator::zero(n) &&
                        endo_commutator(d, g) == lap &&
                        endo_commutator(g, t) == d.scaled(Rational(-2)) &&
                        endo_commutator(lap, r) == EndoOperator::zero(n);
    if (!sl2_ok) {
      detail = "sl(2) x h1 relation fails at n = " + std::to_string(n);
      return false;
    }
    // the five inversion commutators
    const Rational delta(3, 7);
    const ConformalBasis basis = conformal_generators(sig);
    const EndoOperator r0 = op(InvariantName::R0), g0 = op(InvariantName::G0);
    const EndoOperator d0 = op(InvariantName::Delta0), euler = op(InvariantName::Euler);
    for (int i = 0; i < n; ++i) {
      const auto& xbar =
          basis.generators[generator_index(basis, "Xbar_i:" + std::to_string(i + 1))];
      const EndoOperator action = symbol_lie_endo(xbar, delta);
      const EndoOperator mul_xi_i = EndoOperator::multiplication(xi(n, i));
      const EndoOperator dxi_up = EndoOperator::derivative(n, VarKind::Xi, i).scaled(sig.metric(i));
      const EndoOperator dx_i = EndoOperator::derivative(n, VarKind::X, i);
      const bool ok =
          endo_commutator(e, action) == EndoOperator::zero(n) &&
          endo_commutator(r0, action) == EndoOperator::zero(n) &&
          endo_commutator(g0, action) ==
              (endo_compose(r0, dxi_up) +
               endo_compose(mul_xi_i, t).scaled(Rational(2) - Rational(n) * delta))
                  .scaled(Rational(2)) &&
          endo_commutator(d, action) ==
              (-endo_compose(mul_xi_i, t) + endo_compose(euler, dxi_up).scaled(Rational(2)) +
               dxi_up.scaled(Rational(n) * (Rational(1) - delta)))
                  .scaled(Rational(2)) &&
          endo_commutator(d0, action) ==
              (endo_compose(euler, endo_compose(dx_i, t)) + endo_compose(g0, dxi_up) -
               endo_compose(mul_xi_i, endo_compose(d, t)))
                      .scaled(Rational(4)) +
                  endo_compose(dx_i, t).scaled(
                      Rational(2) * (Rational(2) + Rational(n) * (Rational(1) - Rational(2) * delta)));
      if (!ok) {
        detail = "inversion commutator fails at n = " + std::to_string(n);
        return false;
      }
    }
  }
  // Z annihilates everything up to degree 6 at n = 2
  const EndoOperator z = invariant_operator(InvariantName::Z, Signature(2, 0));
  for (const auto& mono : spanning_symbols(2, 6, 3))
    if (!endo_apply(z, mono).is_zero()) {
      detail = "Z fails to annihilate a degree <= 6 monomial";
      return false;
    }
  detail = "all displayed relations exact; Z kernel verified to degree 6";
  return true;
}

bool criterion_star(std::string& detail) {
  const Signature sig(2, 0);
  const int n = 2;
  Sampler sampler(204);
  // 100 random pairs at lambda = 1/2: hbar^1 term is half the Poisson bracket
  const StarTruncation half_cfg{2, Rational(1, 2)};
  for (int c = 0; c < 100; ++c) {
    const auto p = sampler.random_symbol(n, 4, 3, 4);
    const auto q = sampler.random_symbol(n, 4, 3, 4);
    const auto product = star(p, q, half_cfg, sig);
    if (hbar_coefficient(product, 0) != p * q ||
        hbar_coefficient(product, 1) != poisson_bracket(p, q).scaled(Rational(1, 2))) {
      detail = "half-density star product fails on pair " + std::to_string(c);
      return false;
    }
  }
  // lambda in {0, 1/3}: deviation equals the Hochschild coboundary of the
  // first-order cochain extracted from quantize_graded
  const EndoOperator d_op = invariant_operator(InvariantName::D, sig);
  for (const Rational& lambda : {Rational(0), Rational(1, 3)}) {
    for (int c = 0; c < 20; ++c) {
      const auto p = sampler.random_symbol(n, 3, 2, 4);
      const auto q = sampler.random_symbol(n, 3, 2, 4);
      auto cochain = [&](const SymbolPolynomial& v) {
        return hbar_coefficient(quantize_graded(v, Weights(lambda, lambda), sig), 1) -
               endo_apply(d_op, v).scaled(Rational(1, 2));
      };
      if (star_deviation(p, q, lambda, sig) !=
          cochain(p) * q + p * cochain(q) - cochain(p * q)) {
        detail = "Hochschild coboundary mismatch at lambda = " + lambda.str();
        return false;
      }
    }
  }
  // hbar^2-truncated associativity
  const StarTruncation cfg{2, Rational(1, 3)};
  for (int c = 0; c < 15; ++c) {
    const auto p = sampler.random_symbol(n, 3, 2, 3);
    const auto q = sampler.random_symbol(n, 3, 2, 3);
    const auto s = sampler.random_symbol(n, 3, 2, 3);
    if (star(star(p, q, cfg, sig), s, cfg, sig) != star(p, star(q, s, cfg, sig), cfg, sig)) {
      detail = "truncated associativity fails";
      return false;
    }
  }
  detail = "100 Poisson checks, coboundary at lambda in {0,1/3}, associativity mod hbar^3";
  return true;
}

bool criterion_self_adjoint(std::string& detail) {
  for (const Rational& delta : {Rational(0), Rational(1, 3)}) {
    for (int n : {2, 3}) {
      const Signature sig(n, 0);
      if (!delta.is_zero())
        for (const auto& e : enumerate_sigma(sig, 5))
          if (e.delta == delta) {
            detail = "delta = 1/3 resonant at n = " + std::to_string(n);
            return false;
          }
      const Weights w = Weights::symmetric(delta);
      Sampler sampler(314);
      for (int c = 0; c < 25; ++c) {
        const auto p = sampler.random_symbol(n, 4, 3, 5);  // real coefficients
        const OperatorSymbol q = quantize(p, w, sig).output;
        if (adjoint(q) != q) {
          detail = "adjoint mismatch at delta = " + delta.str() + ", n = " + std::to_string(n);
          return false;
        }
      }
    }
  }
  detail = "50 random real symbols per shift, exact";
  return true;
}

bool criterion_weyl(std::string& detail) {
  for (int n : {2, 3, 4}) {
    const Signature sig(n, 0);
    const Weights half(Rational(1, 2), Rational(1, 2));
    const EndoOperator d = invariant_operator(InvariantName::D, sig);
    const Coefficient h2_8(GaussianRational(Rational(1, 8)), 2);
    EndoOperator expected =
        invariant_operator(InvariantName::Delta0, sig)
            .scaled(h2_8 * Coefficient(Rational(n) / (Rational(n + 1) * Rational(n + 2))));
    expected += endo_compose(d, d).scaled(h2_8 * Coefficient(Rational(n, n + 1) - Rational(1)));
    for (const auto& mono : spanning_symbols(n, 2, 2)) {
      if (weyl_map(mono) - quantize_graded(mono, half, sig) != endo_apply(expected, mono)) {
        detail = "difference formula fails at n = " + std::to_string(n);
        return false;
      }
    }
  }
  detail = "Weyl minus half-density difference exact on degree-2 spanning sets";
  return true;
}

bool criterion_prop511(std::string& detail) {
  // Literal check of the displayed first-order formulas. The harmonic legs
  // hold; the s > 0 legs at lambda != 1/2 do NOT: the defining construction
  // (equivariance + Casimir diagonalization, criteria 3 and 6) forces half
  // the displayed G0 coefficient. Verified independently by a brute-force
  // linear solve of the eigen-system; see the unit suite and the project
  // notes. The criterion is reported honestly.
  int failures = 0;
  int checks = 0;
  for (int n : {2, 3}) {
    const Signature sig(n, 0);
    Sampler sampler(415);
    const EndoOperator d_op = invariant_operator(InvariantName::D, sig);
    const EndoOperator g0_op = invariant_operator(InvariantName::G0, sig);
    SymbolPolynomial r(n);
    for (int i = 0; i < n; ++i) r += (xi(n, i) * xi(n, i)).scaled(sig.metric(i));
    for (const Rational& lambda : {Rational(1, 2), Rational(1, 3), Rational(0)}) {
      const Weights w(lambda, lambda);
      for (int k = 3; k <= 5; ++k) {
        for (int s = 0; 2 * s <= k; ++s) {
          SymbolPolynomial q =
              harmonic_project(sampler.random_symbol(n, k - 2 * s, 3, 5), k - 2 * s, 0, sig);
          if (q.is_zero()) continue;
          SymbolPolynomial part = q;
          for (int j = 0; j < s; ++j) part *= r;
          const SymbolPolynomial actual =
              hbar_coefficient(quantize_graded(part, w, sig), 1);
          SymbolPolynomial expected(n);
          if (s == 0) {
            expected = endo_apply(d_op, part).scaled(
                (Rational(n) * lambda + Rational(k - 1)) / Rational(n + 2 * (k - 1)));
          } else {
            expected = endo_apply(d_op, part).scaled(Rational(1, 2));
            expected += endo_apply(g0_op, part)
                            .scaled((Rational(1) - Rational(2) * lambda) * Rational(n) /
                                    (Rational(2) * Rational(s) *
                                     Rational(2 * s - 2 * k - n + 2)));
          }
          ++checks;
          if (actual != expected) ++failures;
        }
      }
    }
  }
  std::ostringstream os;
  os << checks - failures << "/" << checks << " legs match the displayed formulas";
  if (failures)
    os << "; the failing s>0 legs at lambda != 1/2 reproduce the verified factor-2 "
          "inconsistency of the published first-order display against the defining "
          "construction (the engine realizes half the displayed G0 coefficient)";
  detail = os.str();
  return failures == 0;
}

bool criterion_geodesic(std::string& detail) {
  const auto t0 = Clock::now();
  int checked = 0;
  for (int n : {2, 3}) {
    const Signature sig(n, 0);
    const MetricJet flat(TaylorJet::constant(n, 4, Rational(1)), sig);
    if (!geodesic_flow_check(flat).pass) {
      detail = "flat metric fails at n = " + std::to_string(n);
      return false;
    }
    ++checked;
    Sampler sampler(512);
    for (int c = 0; c < 10; ++c) {
      const MetricJet m(sampler.random_unit_jet(n, 4), sig);
      if (!geodesic_flow_check(m).pass) {
        detail = "random jet fails at n = " + std::to_string(n);
        return false;
      }
      ++checked;
    }
  }
  const auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream os;
  os << checked << " jets pass exactly, " << secs << " s";
  detail = os.str();
  return secs < 120.0;
}

bool criterion_the_array(std::string& detail) {
  for (int n : {2, 3}) {
    const Signature sig(n, 0);
    const Rational delta(2, n);
    const Weights yamabe(Rational(n - 2, 2 * n), Rational(n + 2, 2 * n));
    if (probe_critical(sig, yamabe, 2).any_critical()) {
      detail = "Yamabe weights report critical at n = " + std::to_string(n);
      return false;
    }
    const Weights generic(Rational(1, 5), Rational(1, 5) + delta);
    const auto report = probe_critical(sig, generic, 2);
    bool found = false;
    for (const auto& cell : report.cells)
      if (cell.status == ProbeStatus::Critical && cell.witness.has_value()) found = true;
    if (!found) {
      detail = "generic weights not detected as critical at n = " + std::to_string(n);
      return false;
    }
  }
  detail = "Yamabe column consistent, generic weights critical with witness, n in {2,3}";
  return true;
}

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "second-order closed form", criterion_second_order},
      {2, "half-density map", criterion_half_density},
      {3, "equivariance", criterion_equivariance},
      {4, "resonance enumeration", criterion_resonances},
      {5, "delta = 0 robustness", criterion_delta_zero},
      {6, "Casimir cross-checks", criterion_casimir},
      {7, "commutant relations", criterion_commutant},
      {8, "star product", criterion_star},
      {9, "self-adjointness", criterion_self_adjoint},
      {10, "Weyl comparison", criterion_weyl},
      {11, "first-order display (literal)", criterion_prop511},
      {12, "quantized geodesic flow", criterion_geodesic},
      {13, "resonant weight table probe", criterion_the_array},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("CRITERION %02d %-4s %-32s %s\n", criterion.id, ok ? "PASS" : "FAIL",
                criterion.title.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
