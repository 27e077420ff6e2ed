#include "ceq/quantizer.hpp"

#include <stdexcept>

#include "ceq/invariants.hpp"

namespace ceq {
namespace {

std::string critical_message(int k, int s, int l, int t, const Rational& delta) {
  return "critical resonance at delta = " + delta.str() + ": (k,s) = (" + std::to_string(k) + "," +
         std::to_string(s) + ") collides with (l,t) = (" + std::to_string(l) + "," +
         std::to_string(t) + ")";
}

}  // namespace

CriticalResonance::CriticalResonance(int k_, int s_, int l_, int t_, Rational delta_)
    : std::runtime_error(critical_message(k_, s_, l_, t_, delta_)),
      k(k_), s(s_), l(l_), t(t_), delta(std::move(delta_)) {}

SecondOrderResonance::SecondOrderResonance(Rational delta_)
    : std::runtime_error("second-order map undefined at resonant delta = " + delta_.str()),
      delta(std::move(delta_)) {}

OperatorSymbol solve_eigenvector(const HarmonicComponent& comp, const Weights& w,
                                 const Signature& sig, std::vector<TraceStep>* trace) {
  const int n = sig.n();
  if (n < 2) throw std::invalid_argument("solve_eigenvector: need n >= 2");
  if (comp.part.n() != n)
    throw std::invalid_argument("solve_eigenvector: mismatched dimension n");
  const Rational delta = w.delta();
  const EndoOperator n_lambda = casimir_nilpotent_part(sig, w);
  const EndoOperator r0 = invariant_operator(InvariantName::R0, sig);
  const Rational gamma_top = gamma_eigenvalue(comp.k, comp.s, sig, delta);

  SymbolPolynomial result = comp.part;
  SymbolPolynomial level = comp.part;  // sum of the components at the current xi-degree
  for (int l = comp.k - 1; l >= 0; --l) {
    const SymbolPolynomial rhs = endo_apply(n_lambda, level);
    SymbolPolynomial assigned(n);
    for (int t = 0; 2 * t <= l; ++t) {
      SymbolPolynomial part = harmonic_project(r0, rhs, l, t, sig);
      const bool in_tree = (comp.s - t >= 0) && (comp.s - t <= comp.k - l);
      if (!in_tree) {
        // The degree-lowering operators cannot leave the tree.
        if (!part.is_zero())
          throw std::logic_error("solve_eigenvector: component escaped the (k,s) tree");
        continue;
      }
      const Rational divisor = gamma_top - gamma_eigenvalue(l, t, sig, delta);
      if (divisor.is_zero()) {
        if (!part.is_zero()) throw CriticalResonance(comp.k, comp.s, l, t, delta);
        // Resonant but consistent: the component is zero-filled.
        if (trace) trace->push_back({comp.k, comp.s, l, t, Rational(0)});
        continue;
      }
      if (part.is_zero()) continue;
      part = part.scaled(Rational(1) / divisor);
      if (trace) trace->push_back({comp.k, comp.s, l, t, divisor});
      result += part;
      assigned += part;
    }
    level = std::move(assigned);
  }
  return OperatorSymbol(result);
}

QuantizationResult quantize_tilde(const SymbolPolynomial& p, const Weights& w,
                                  const Signature& sig) {
  QuantizationResult res{p, OperatorSymbol(SymbolPolynomial(p.n())), w, {}};
  SymbolPolynomial out(p.n());
  for (const auto& comp : harmonic_decompose(p, sig))
    out += solve_eigenvector(comp, w, sig, &res.trace).body();
  res.output = OperatorSymbol(std::move(out));
  return res;
}

SymbolPolynomial quantize_tilde_inverse(const SymbolPolynomial& p, const Weights& w,
                                        const Signature& sig) {
  // Q~ = Id + N with N strictly xi-degree lowering, so
  // Q~^{-1} = sum_j (-N)^j is a finite sum.
  SymbolPolynomial sum = p;
  SymbolPolynomial term = p;
  int sign = -1;
  while (!term.is_zero()) {
    term = quantize_tilde(term, w, sig).output.body() - term;  // N(term)
    if (term.is_zero()) break;
    sum += (sign > 0) ? term : -term;
    sign = -sign;
  }
  return sum;
}

SymbolPolynomial i_hbar(const SymbolPolynomial& p, bool invert) {
  SymbolPolynomial r(p.n());
  for (const auto& [m, c] : p.terms()) {
    const int deg = m.xi_degree();
    r.add_term(m, invert ? c.div_i_hbar(deg) : c.times_i_hbar(deg));
  }
  return r;
}

QuantizationResult quantize(const SymbolPolynomial& p, const Weights& w, const Signature& sig) {
  QuantizationResult res = quantize_tilde(i_hbar(p), w, sig);
  res.input = p;
  return res;
}

SymbolPolynomial quantize_graded(const SymbolPolynomial& p, const Weights& w,
                                 const Signature& sig) {
  return i_hbar(quantize(p, w, sig).output.body(), /*invert=*/true);
}

std::vector<Rational> second_order_coefficients(const Signature& sig, const Weights& w) {
  const Rational n(sig.n());
  const Rational lambda = w.lambda;
  const Rational mu = w.mu;
  const Rational delta = w.delta();
  const Rational one(1), two(2);

  for (const Rational& res :
       {two / n, (n + two) / (two * n), one, (n + one) / n, (n + two) / n})
    if (delta == res) throw SecondOrderResonance(delta);

  const Rational nd2 = n * delta - two;            // n delta - 2
  const Rational nd1m2 = n * (delta - one) - two;  // n(delta-1) - 2
  const Rational nd1m1 = n * (delta - one) - one;  // n(delta-1) - 1
  const Rational n2d1m2 = n * (two * delta - one) - two;

  const Rational g1 = n * (lambda + mu - one) / (two * nd2 * nd1m2);
  const Rational g2 = lambda / (one - delta);
  const Rational g3 = (one - lambda - mu) / ((delta - one) * nd1m2);
  const Rational g4 = n * lambda *
                      (two + (Rational(4) * lambda - one) * n +
                       (two * lambda * lambda - lambda * mu - mu * mu + two * mu - one) * n * n) /
                      (two * nd1m1 * n2d1m2 * nd2 * nd1m2);
  const Rational g5 = n * lambda * (n * lambda + one) / (two * nd1m1 * nd1m2);
  return {g1, g2, g3, g4, g5};
}

EndoOperator second_order_map(const Signature& sig, const Weights& w) {
  const auto g = second_order_coefficients(sig, w);
  const EndoOperator d = invariant_operator(InvariantName::D, sig);
  EndoOperator m = EndoOperator::identity(sig.n());
  m += invariant_operator(InvariantName::G0, sig).scaled(g[0]);
  m += d.scaled(g[1]);
  m += endo_compose(invariant_operator(InvariantName::Euler, sig), d).scaled(g[2]);
  m += invariant_operator(InvariantName::Delta0, sig).scaled(g[3]);
  m += endo_compose(d, d).scaled(g[4]);
  return m;
}

SymbolPolynomial weyl_map(const SymbolPolynomial& p) {
  const int n = p.n();
  SymbolPolynomial sum = p;
  SymbolPolynomial term = p;
  for (int m = 1; !term.is_zero(); ++m) {
    SymbolPolynomial next(n);
    for (int i = 0; i < n; ++i)
      next += term.differentiate(VarKind::Xi, i).differentiate(VarKind::X, i);
    if (next.is_zero()) break;
    term = next.scaled(Coefficient(GaussianRational(Rational(0), Rational(1, 2)), 1))
               .scaled(Rational(1, m));  // * (i hbar / 2) / m
    sum += term;
  }
  return sum;
}

}  // namespace ceq
