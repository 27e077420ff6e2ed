#pragma once

#include "ceq/polynomial.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// Truncation settings for the induced product on symbols. The product is
// defined at shift zero (lambda = mu).
struct StarTruncation {
  int order = 2;  // maximum ħ-power retained
  Rational lambda = Rational(1, 2);
};

// P * Q = Q^{-1}( Q(P) o Q(Q) ), truncated at ħ^order, with Q = quantize and
// o the sigma-symbol composition; the inverse goes through the finite Neumann
// series of Q~ = Id + N. Never resonates at delta = 0.
SymbolPolynomial star(const SymbolPolynomial& p, const SymbolPolynomial& q,
                      const StarTruncation& cfg, const Signature& sig);

// The (i hbar)^1 coefficient of P * Q minus the star-product normal form
// PQ + (1/2){P,Q}: the Hochschild-coboundary deviation that vanishes exactly
// at lambda = 1/2.
SymbolPolynomial star_deviation(const SymbolPolynomial& p, const SymbolPolynomial& q,
                                const Rational& lambda, const Signature& sig);

}  // namespace ceq
