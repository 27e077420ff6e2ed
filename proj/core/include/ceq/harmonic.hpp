#pragma once

#include <vector>

#include "ceq/endo.hpp"
#include "ceq/polynomial.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// The (k,s) piece of a symbol: xi-homogeneous of degree k, of the form
// R^s Q with Q tracefree (T Q = 0); an R0-eigenvector with eigenvalue
// rho(k,s). The x-dependence of coefficients passes through untouched.
struct HarmonicComponent {
  int k = 0;
  int s = 0;
  SymbolPolynomial part;
};

// rho_{k,s} = 2s(n + 2(k - s - 1)). Requires 0 <= 2s <= k.
Rational rho_eigenvalue(int k, int s, const Signature& sig);

// gamma_{k,s} = rho_{k,s} + 2k(1 + n(delta-1) - k) - n^2 delta(delta-1),
// the C_delta eigenvalue on the (k,s) component.
Rational gamma_eigenvalue(int k, int s, const Signature& sig, const Rational& delta);

// The (k,s) component of P via the spectral projector
// prod_{t != s} (R0 - rho_{k,t}) / (rho_{k,s} - rho_{k,t}); idempotent.
SymbolPolynomial harmonic_project(const SymbolPolynomial& p, int k, int s, const Signature& sig);

// Same, reusing a prebuilt R0 = invariant_operator(InvariantName::R0, sig);
// the hot path for callers that project many components.
SymbolPolynomial harmonic_project(const EndoOperator& r0, const SymbolPolynomial& p, int k, int s,
                                  const Signature& sig);

// Full eigendecomposition; the parts sum to P exactly.
std::vector<HarmonicComponent> harmonic_decompose(const SymbolPolynomial& p, const Signature& sig);

}  // namespace ceq
