#include "ceq/star_product.hpp"

#include <stdexcept>

#include "ceq/quantizer.hpp"

namespace ceq {
namespace {

SymbolPolynomial star_exact(const SymbolPolynomial& p, const SymbolPolynomial& q,
                            const Rational& lambda, const Signature& sig) {
  if (p.n() != q.n() || p.n() != sig.n())
    throw std::invalid_argument("star: mismatched dimension n");
  const Weights w(lambda, lambda);
  const OperatorSymbol qp = quantize(p, w, sig).output;
  const OperatorSymbol qq = quantize(q, w, sig).output;
  const SymbolPolynomial composed = compose(qp, qq).body();
  return i_hbar(quantize_tilde_inverse(composed, w, sig), /*invert=*/true);
}

}  // namespace

SymbolPolynomial star(const SymbolPolynomial& p, const SymbolPolynomial& q,
                      const StarTruncation& cfg, const Signature& sig) {
  if (cfg.order < 0) throw std::invalid_argument("star: truncation order must be >= 0");
  const SymbolPolynomial exact = star_exact(p, q, cfg.lambda, sig);
  SymbolPolynomial out(exact.n());
  for (const auto& [m, c] : exact.terms()) out.add_term(m, c.truncate_hpow(cfg.order));
  return out;
}

SymbolPolynomial star_deviation(const SymbolPolynomial& p, const SymbolPolynomial& q,
                                const Rational& lambda, const Signature& sig) {
  const SymbolPolynomial exact = star_exact(p, q, lambda, sig);
  // Extract the coefficient of (i hbar)^1.
  SymbolPolynomial first(exact.n());
  for (const auto& [m, c] : exact.terms()) {
    const GaussianRational v = c.at_hpow(1) * i_power(-1);
    first.add_term(m, Coefficient(v));
  }
  return first - poisson_bracket(p, q).scaled(Rational(1, 2));
}

}  // namespace ceq
