#pragma once

#include <cstdint>
#include <random>

#include "ceq/jets.hpp"
#include "ceq/lie.hpp"
#include "ceq/polynomial.hpp"

namespace ceq {

// Deterministic generator of random exact inputs for the verification suites
// and the randomized tests. A fixed seed reproduces the exact same values.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi);  // inclusive

  // Nonzero rational with small numerator and denominator.
  Rational small_rational(int max_num = 4, int max_den = 3);
  Rational small_rational_or_zero(int max_num = 4, int max_den = 3);

  // Random symbol with the given number of monomials (before cancellation).
  SymbolPolynomial random_symbol(int n, int max_xi_deg, int max_x_deg, int terms,
                                 bool complex_coeffs = false);
  SymbolPolynomial random_x_polynomial(int n, int max_deg, int terms);

  VectorField random_vector_field(int n, int max_deg, int terms_per_component);

  // Jet with F(0) = 1; with zero_linear_part the 1-jet vanishes.
  TaylorJet random_unit_jet(int n, int order, bool zero_linear_part = false);

 private:
  std::vector<int> random_exponents(int n, int max_total);

  std::mt19937_64 rng_;
};

}  // namespace ceq
