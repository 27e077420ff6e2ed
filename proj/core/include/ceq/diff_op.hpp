#pragma once

#include "ceq/polynomial.hpp"

namespace ceq {

// A differential operator stored through its sigma-symbol (normal ordering:
// every d_x to the right of the coefficients). The xi-exponents of the body
// encode the x-derivative multi-indices, so operator equality is polynomial
// equality of the bodies.
class OperatorSymbol {
 public:
  explicit OperatorSymbol(SymbolPolynomial body) : body_(std::move(body)) {}

  static OperatorSymbol identity(int n) {
    return OperatorSymbol(SymbolPolynomial::constant(n, Coefficient::one()));
  }

  int n() const { return body_.n(); }
  const SymbolPolynomial& body() const { return body_; }

  friend bool operator==(const OperatorSymbol& a, const OperatorSymbol& b) {
    return a.body_ == b.body_;
  }
  friend bool operator!=(const OperatorSymbol& a, const OperatorSymbol& b) { return !(a == b); }

 private:
  SymbolPolynomial body_;
};

// Applies A = sum_alpha A_alpha(x) d_x^alpha to a function of x only.
// Throws std::invalid_argument when f involves xi.
SymbolPolynomial apply(const OperatorSymbol& a, const SymbolPolynomial& f);

// sigma-symbol of A o B: sum_alpha (1/alpha!) d_xi^alpha(A) d_x^alpha(B).
// No ħ factors here; the graded (iħ)^l/l! series is recovered by conjugating
// with the xi-scaling map (see quantizer).
OperatorSymbol compose(const OperatorSymbol& a, const OperatorSymbol& b);

// Formal adjoint of A : F_lambda -> F_mu with lambda + mu = 1, with respect
// to the pairing integral(conj(phi) psi):
//   A* = sum_alpha (-1)^{|alpha|} d_x^alpha o conj(A_alpha(x)),
// evaluated in sigma-symbol form via compose. The conjugation maps i -> -i
// and fixes ħ.
OperatorSymbol adjoint(const OperatorSymbol& a);

std::ostream& operator<<(std::ostream& os, const OperatorSymbol& a);

}  // namespace ceq
