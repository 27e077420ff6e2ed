#include "ceq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ceq {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpq_class v(std::string(text), 10);
      v.canonicalize();
      return Rational(std::move(v));
    }
    const mpz_class num(std::string(text.substr(0, slash)), 10);
    const mpz_class den(std::string(text.substr(slash + 1)), 10);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "': " + e.what());
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ceq
