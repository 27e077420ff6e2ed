#include "ceq/invariants.hpp"

#include <stdexcept>

namespace ceq {
namespace {

EndoOperator op_r(const Signature& sig) {
  const int n = sig.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    EndoTerm t = EndoTerm::unit(n);
    t.xi[i] = 2;
    r.add_term(t, Coefficient(sig.metric(i)));
  }
  return r;
}

EndoOperator op_t(const Signature& sig) {
  const int n = sig.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    EndoTerm t = EndoTerm::unit(n);
    t.dxi[i] = 2;
    r.add_term(t, Coefficient(sig.metric(i)));
  }
  return r;
}

EndoOperator op_euler(const Signature& sig) {
  const int n = sig.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    EndoTerm t = EndoTerm::unit(n);
    t.xi[i] = 1;
    t.dxi[i] = 1;
    r.add_term(t, Coefficient::one());
  }
  return r;
}

EndoOperator op_e(const Signature& sig) {
  return op_euler(sig) + EndoOperator::identity(sig.n()).scaled(Rational(sig.n(), 2));
}

EndoOperator op_g(const Signature& sig) {
  const int n = sig.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    EndoTerm t = EndoTerm::unit(n);
    t.xi[i] = 1;
    t.dx[i] = 1;
    r.add_term(t, Coefficient(sig.metric(i)));
  }
  return r;
}

EndoOperator op_d(const Signature& sig) {
  const int n = sig.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    EndoTerm t = EndoTerm::unit(n);
    t.dxi[i] = 1;
    t.dx[i] = 1;
    r.add_term(t, Coefficient::one());
  }
  return r;
}

EndoOperator op_delta(const Signature& sig) {
  const int n = sig.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    EndoTerm t = EndoTerm::unit(n);
    t.dx[i] = 2;
    r.add_term(t, Coefficient(sig.metric(i)));
  }
  return r;
}

EndoOperator op_csl2(const Signature& sig) {
  const EndoOperator e = op_e(sig);
  const EndoOperator r = op_r(sig);
  const EndoOperator t = op_t(sig);
  return endo_compose(e, e) - endo_anticommutator(r, t).scaled(Rational(1, 2));
}

EndoOperator op_z(const Signature& sig) {
  if (sig.n() != 2) throw std::invalid_argument("invariant_operator: Z is defined only for n = 2");
  const EndoOperator c = op_csl2(sig);
  const EndoOperator g = op_g(sig);
  const EndoOperator d = op_d(sig);
  const EndoOperator lap = op_delta(sig);
  EndoOperator z = endo_compose(c + EndoOperator::identity(2).scaled(Rational(3, 2)), lap);
  z += (endo_anticommutator(d, endo_commutator(g, c)) -
        endo_anticommutator(g, endo_commutator(d, c)))
           .scaled(Rational(1, 4));
  return z;
}

}  // namespace

std::optional<InvariantName> invariant_name_from_string(std::string_view s) {
  if (s == "R") return InvariantName::R;
  if (s == "E") return InvariantName::E;
  if (s == "T") return InvariantName::T;
  if (s == "G") return InvariantName::G;
  if (s == "D") return InvariantName::D;
  if (s == "Delta") return InvariantName::Delta;
  if (s == "Euler") return InvariantName::Euler;
  if (s == "R0") return InvariantName::R0;
  if (s == "G0") return InvariantName::G0;
  if (s == "Delta0") return InvariantName::Delta0;
  if (s == "Z") return InvariantName::Z;
  if (s == "C_sl2") return InvariantName::CSl2;
  return std::nullopt;
}

const char* to_string(InvariantName name) {
  switch (name) {
    case InvariantName::R: return "R";
    case InvariantName::E: return "E";
    case InvariantName::T: return "T";
    case InvariantName::G: return "G";
    case InvariantName::D: return "D";
    case InvariantName::Delta: return "Delta";
    case InvariantName::Euler: return "Euler";
    case InvariantName::R0: return "R0";
    case InvariantName::G0: return "G0";
    case InvariantName::Delta0: return "Delta0";
    case InvariantName::Z: return "Z";
    case InvariantName::CSl2: return "C_sl2";
  }
  return "?";
}

std::vector<std::string> invariant_name_list() {
  return {"R", "E", "T", "G", "D", "Delta", "Euler", "R0", "G0", "Delta0", "Z", "C_sl2"};
}

EndoOperator invariant_operator(InvariantName name, const Signature& sig) {
  switch (name) {
    case InvariantName::R: return op_r(sig);
    case InvariantName::E: return op_e(sig);
    case InvariantName::T: return op_t(sig);
    case InvariantName::G: return op_g(sig);
    case InvariantName::D: return op_d(sig);
    case InvariantName::Delta: return op_delta(sig);
    case InvariantName::Euler: return op_euler(sig);
    case InvariantName::R0: return endo_compose(op_r(sig), op_t(sig));
    case InvariantName::G0: return endo_compose(op_g(sig), op_t(sig));
    case InvariantName::Delta0: return endo_compose(op_delta(sig), op_t(sig));
    case InvariantName::Z: return op_z(sig);
    case InvariantName::CSl2: return op_csl2(sig);
  }
  throw std::invalid_argument("invariant_operator: unknown name");
}

EndoOperator casimir_symbols(const Signature& sig, const Rational& delta) {
  const int n = sig.n();
  const EndoOperator euler = op_euler(sig);
  EndoOperator c = endo_compose(op_r(sig), op_t(sig));
  c += euler.scaled(Rational(2) * (Rational(1) + Rational(n) * (delta - Rational(1))));
  c -= endo_compose(euler, euler).scaled(Rational(2));
  c -= EndoOperator::identity(n).scaled(Rational(n) * Rational(n) * delta * (delta - Rational(1)));
  return c;
}

EndoOperator casimir_nilpotent_part(const Signature& sig, const Weights& w) {
  const int n = sig.n();
  EndoOperator nl = endo_compose(op_g(sig), op_t(sig));
  nl -= op_d(sig).scaled(Rational(2) * Rational(n) * w.lambda);
  nl -= endo_compose(op_euler(sig), op_d(sig)).scaled(Rational(2));
  return nl;
}

EndoOperator casimir_operators(const Signature& sig, const Weights& w) {
  return casimir_symbols(sig, w.delta()) + casimir_nilpotent_part(sig, w);
}

EndoOperator symbol_lie_endo(const VectorField& x, const Rational& delta) {
  const int n = x.n();
  EndoOperator r(n);
  for (int i = 0; i < n; ++i) {
    r += endo_compose(EndoOperator::multiplication(x.component(i)),
                      EndoOperator::derivative(n, VarKind::X, i));
    SymbolPolynomial dix(n);
    for (int j = 0; j < n; ++j)
      dix += x.component(j).differentiate(VarKind::X, i) *
             SymbolPolynomial::variable(n, VarKind::Xi, j);
    r -= endo_compose(EndoOperator::multiplication(dix),
                      EndoOperator::derivative(n, VarKind::Xi, i));
  }
  r += EndoOperator::multiplication(x.divergence().scaled(delta));
  return r;
}

EndoOperator operator_lie_endo(const VectorField& x, const Weights& w) {
  const int n = x.n();
  const SymbolPolynomial lmu = density_lie_operator(x, w.mu).body();
  const SymbolPolynomial llam = density_lie_operator(x, w.lambda).body();
  EndoOperator r(n);
  // A -> sigma(L^mu o A): sum_alpha (1/alpha!) M_{d_xi^alpha L} o d_x^alpha.
  for (const auto& alpha : multi_indices(n, std::max(0, lmu.xi_degree()))) {
    SymbolPolynomial coeff = lmu;
    Rational inv_factorial(1);
    EndoTerm deriv = EndoTerm::unit(n);
    for (int i = 0; i < n; ++i) {
      deriv.dx[i] = alpha[i];
      for (int r_ = 0; r_ < alpha[i]; ++r_) {
        coeff = coeff.differentiate(VarKind::Xi, i);
        inv_factorial /= Rational(r_ + 1);
      }
    }
    if (coeff.is_zero()) continue;
    EndoOperator d(n);
    d.add_term(deriv, Coefficient(inv_factorial));
    r += endo_compose(EndoOperator::multiplication(coeff), d);
  }
  // A -> sigma(A o L^lambda): sum_alpha (1/alpha!) M_{d_x^alpha L} o d_xi^alpha.
  for (const auto& alpha : multi_indices(n, std::max(0, llam.x_degree()))) {
    SymbolPolynomial coeff = llam;
    Rational inv_factorial(1);
    EndoTerm deriv = EndoTerm::unit(n);
    for (int i = 0; i < n; ++i) {
      deriv.dxi[i] = alpha[i];
      for (int r_ = 0; r_ < alpha[i]; ++r_) {
        coeff = coeff.differentiate(VarKind::X, i);
        inv_factorial /= Rational(r_ + 1);
      }
    }
    if (coeff.is_zero()) continue;
    EndoOperator d(n);
    d.add_term(deriv, Coefficient(inv_factorial));
    r -= endo_compose(EndoOperator::multiplication(coeff), d);
  }
  return r;
}

EndoOperator casimir_symbols_basis_sum(const Signature& sig, const Rational& delta) {
  const ConformalBasis basis = conformal_generators(sig);
  EndoOperator c(sig.n());
  for (int a = 0; a < basis.size(); ++a)
    c += endo_compose(symbol_lie_endo(basis.duals[a], delta),
                      symbol_lie_endo(basis.generators[a], delta));
  return c;
}

EndoOperator casimir_operators_basis_sum(const Signature& sig, const Weights& w) {
  const ConformalBasis basis = conformal_generators(sig);
  EndoOperator c(sig.n());
  for (int a = 0; a < basis.size(); ++a)
    c += endo_compose(operator_lie_endo(basis.duals[a], w),
                      operator_lie_endo(basis.generators[a], w));
  return c;
}

}  // namespace ceq
