#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ceq {

// Exact rational scalar backed by GMP. Values are always canonical:
// lowest terms, positive denominator. All arithmetic is exact; there is
// no floating-point path anywhere in this library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(long num, long den);

  // Parses "num", "-num" or "num/den". Rejects zero denominators.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const;

  // "num" or "num/den", matching the JSON wire format.
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

inline Rational operator+(Rational a, const Rational& b) { a += b; return a; }
inline Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
inline Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
inline Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ceq
