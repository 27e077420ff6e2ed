#include "ceq/harmonic.hpp"

#include <stdexcept>

#include "ceq/invariants.hpp"

namespace ceq {
namespace {

void check_range(int k, int s) {
  if (k < 0 || s < 0 || 2 * s > k)
    throw std::invalid_argument("harmonic: need 0 <= 2s <= k");
}

}  // namespace

Rational rho_eigenvalue(int k, int s, const Signature& sig) {
  check_range(k, s);
  return Rational(2) * Rational(s) * Rational(sig.n() + 2 * (k - s - 1));
}

Rational gamma_eigenvalue(int k, int s, const Signature& sig, const Rational& delta) {
  const Rational n(sig.n());
  return rho_eigenvalue(k, s, sig) +
         Rational(2 * k) * (Rational(1) + n * (delta - Rational(1)) - Rational(k)) -
         n * n * delta * (delta - Rational(1));
}

SymbolPolynomial harmonic_project(const EndoOperator& r0, const SymbolPolynomial& p, int k,
                                  int s, const Signature& sig) {
  check_range(k, s);
  if (p.n() != sig.n()) throw std::invalid_argument("harmonic_project: mismatched dimension n");
  SymbolPolynomial part = p.xi_part(k);
  if (part.is_zero()) return part;
  const Rational rho_s = rho_eigenvalue(k, s, sig);
  for (int t = 0; 2 * t <= k; ++t) {
    if (t == s) continue;
    const Rational rho_t = rho_eigenvalue(k, t, sig);
    // Eigenvalues are distinct within a fixed k (strictly increasing in s).
    part = (endo_apply(r0, part) - part.scaled(rho_t)).scaled(Rational(1) / (rho_s - rho_t));
    if (part.is_zero()) break;
  }
  return part;
}

SymbolPolynomial harmonic_project(const SymbolPolynomial& p, int k, int s, const Signature& sig) {
  return harmonic_project(invariant_operator(InvariantName::R0, sig), p, k, s, sig);
}

std::vector<HarmonicComponent> harmonic_decompose(const SymbolPolynomial& p,
                                                  const Signature& sig) {
  if (p.n() != sig.n()) throw std::invalid_argument("harmonic_decompose: mismatched dimension n");
  const EndoOperator r0 = invariant_operator(InvariantName::R0, sig);
  std::vector<HarmonicComponent> out;
  for (const auto& [k, part] : p.xi_degree_split()) {
    for (int s = 0; 2 * s <= k; ++s) {
      SymbolPolynomial comp = harmonic_project(r0, part, k, s, sig);
      if (!comp.is_zero()) out.push_back({k, s, std::move(comp)});
    }
  }
  return out;
}

}  // namespace ceq
