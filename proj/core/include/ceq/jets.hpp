#pragma once

#include "ceq/polynomial.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// Truncated Taylor expansion at the origin: a real-rational polynomial in x
// modulo x-degree order+1. Derivatives lose one order; products, inverses and
// rational powers are exact modulo the truncation.
class TaylorJet {
 public:
  TaylorJet(int n, int order);
  // Truncates p (must be x-only with plain rational coefficients).
  TaylorJet(SymbolPolynomial p, int order);

  static TaylorJet constant(int n, int order, const Rational& value);

  int n() const { return body_.n(); }
  int order() const { return order_; }
  const SymbolPolynomial& body() const { return body_; }

  Rational value_at_origin() const;
  Rational coefficient(const std::vector<int>& x_exponents) const;
  void set_coefficient(const std::vector<int>& x_exponents, const Rational& value);

  TaylorJet& operator+=(const TaylorJet& o);
  TaylorJet& operator-=(const TaylorJet& o);
  TaylorJet& operator*=(const TaylorJet& o);  // truncates to min(order)
  TaylorJet scaled(const Rational& r) const;

  // Geometric series; requires a nonzero constant term.
  TaylorJet inverse() const;
  // Binomial series (1 + u)^e for rational e; requires constant term 1.
  TaylorJet pow(const Rational& exponent) const;

  // Exact derivative; the result is one order lower.
  TaylorJet derivative(int index) const;

  friend bool operator==(const TaylorJet& a, const TaylorJet& b) {
    return a.order_ == b.order_ && a.body_ == b.body_;
  }

 private:
  int order_;
  SymbolPolynomial body_;
};

TaylorJet operator+(TaylorJet a, const TaylorJet& b);
TaylorJet operator-(TaylorJet a, const TaylorJet& b);
TaylorJet operator*(TaylorJet a, const TaylorJet& b);

// Conformally flat metric germ g_ij = F eta_ij with eta the flat diagonal
// (p,q) metric and F a jet with F(0) = 1 (so that rational powers of F stay
// rational).
struct MetricJet {
  TaylorJet conformal_factor;
  Signature sig;

  MetricJet(TaylorJet f, Signature s);

  int order() const { return conformal_factor.order(); }
  // g_ii and g^ii as jets.
  TaylorJet metric_component(int i) const;
  TaylorJet inverse_metric_component(int i) const;
};

// Scalar curvature of g = F eta at the origin, from the Christoffel symbols
// of the metric 2-jet. Requires jet order >= 2.
Rational curvature_at_origin(const MetricJet& m);

}  // namespace ceq
