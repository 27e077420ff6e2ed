#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ceq/rational.hpp"

namespace ceq {

// Gaussian rational re + im*i.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re, -im}; }

  std::string str() const;

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }

// i^m for any integer m.
GaussianRational i_power(int m);

// One ħ-monomial: value * ħ^hpow. Sums of different ħ-powers live in
// Coefficient below; two ScaledCoefficients only add when their hpow match.
struct ScaledCoefficient {
  GaussianRational value;
  int hpow = 0;
};

// Coefficient attached to one symbol term: a finite sum of ScaledCoefficients
// with strictly increasing ħ-powers and no zero values.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Rational r) {  // NOLINT
    if (!r.is_zero()) parts_.push_back({GaussianRational(std::move(r)), 0});
  }
  Coefficient(GaussianRational v, int hpow = 0) {  // NOLINT
    if (!v.is_zero()) parts_.push_back({std::move(v), hpow});
  }

  static Coefficient one() { return Coefficient(Rational(1)); }

  bool is_zero() const { return parts_.empty(); }
  const std::vector<ScaledCoefficient>& parts() const { return parts_; }

  // True when the coefficient is a plain real rational (ħ^0, no i part).
  bool is_real_constant() const {
    if (parts_.empty()) return true;
    return parts_.size() == 1 && parts_[0].hpow == 0 && parts_[0].value.is_real();
  }

  // Value of the ħ^h part (zero when absent).
  GaussianRational at_hpow(int h) const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient operator-() const;

  Coefficient conj() const;  // i -> -i, ħ fixed

  // Multiplies by (iħ)^m, m >= 0.
  Coefficient times_i_hbar(int m) const;
  // Divides by (iħ)^m; throws std::invalid_argument when some part has hpow < m.
  Coefficient div_i_hbar(int m) const;

  // Drops all parts with hpow > order.
  Coefficient truncate_hpow(int order) const;

  int max_hpow() const;  // -1 when zero

  std::string str() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b);
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

 private:
  void insert(const ScaledCoefficient& part);

  std::vector<ScaledCoefficient> parts_;
};

inline Coefficient operator+(Coefficient a, const Coefficient& b) { a += b; return a; }
inline Coefficient operator-(Coefficient a, const Coefficient& b) { a -= b; return a; }
inline Coefficient operator*(Coefficient a, const Coefficient& b) { a *= b; return a; }

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace ceq
