#include "ceq/sampling.hpp"

namespace ceq {

int Sampler::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Sampler::small_rational(int max_num, int max_den) {
  int num = 0;
  while (num == 0) num = uniform_int(-max_num, max_num);
  return Rational(num, uniform_int(1, max_den));
}

Rational Sampler::small_rational_or_zero(int max_num, int max_den) {
  return Rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
}

std::vector<int> Sampler::random_exponents(int n, int max_total) {
  std::vector<int> e(n, 0);
  const int total = uniform_int(0, max_total);
  for (int u = 0; u < total; ++u) ++e[uniform_int(0, n - 1)];
  return e;
}

SymbolPolynomial Sampler::random_symbol(int n, int max_xi_deg, int max_x_deg, int terms,
                                        bool complex_coeffs) {
  SymbolPolynomial p(n);
  for (int t = 0; t < terms; ++t) {
    const Monomial m(random_exponents(n, max_x_deg), random_exponents(n, max_xi_deg));
    GaussianRational v(small_rational());
    if (complex_coeffs && uniform_int(0, 1)) v.im = small_rational();
    p.add_term(m, Coefficient(v));
  }
  return p;
}

SymbolPolynomial Sampler::random_x_polynomial(int n, int max_deg, int terms) {
  SymbolPolynomial p(n);
  for (int t = 0; t < terms; ++t)
    p.add_term(Monomial(random_exponents(n, max_deg), std::vector<int>(n, 0)),
               Coefficient(small_rational()));
  return p;
}

VectorField Sampler::random_vector_field(int n, int max_deg, int terms_per_component) {
  VectorField v(n);
  for (int i = 0; i < n; ++i) v.set_component(i, random_x_polynomial(n, max_deg, terms_per_component));
  return v;
}

TaylorJet Sampler::random_unit_jet(int n, int order, bool zero_linear_part) {
  TaylorJet j = TaylorJet::constant(n, order, Rational(1));
  for (const auto& e : multi_indices(n, order)) {
    int total = 0;
    for (int v : e) total += v;
    if (total == 0) continue;
    if (zero_linear_part && total == 1) continue;
    if (uniform_int(0, 2) == 0) continue;  // keep jets reasonably sparse
    j.set_coefficient(e, small_rational(3, 4));
  }
  return j;
}

}  // namespace ceq
