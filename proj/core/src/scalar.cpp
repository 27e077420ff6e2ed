#include "ceq/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ceq {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  const Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = r;
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + "*i";
  return "(" + re.str() + (im.sign() > 0 ? "+" : "") + im.str() + "*i)";
}

GaussianRational i_power(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return GaussianRational(Rational(1));
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(Rational(-1));
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational Coefficient::at_hpow(int h) const {
  for (const auto& p : parts_) {
    if (p.hpow == h) return p.value;
    if (p.hpow > h) break;
  }
  return GaussianRational();
}

void Coefficient::insert(const ScaledCoefficient& part) {
  if (part.value.is_zero()) return;
  auto it = std::lower_bound(parts_.begin(), parts_.end(), part.hpow,
                             [](const ScaledCoefficient& p, int h) { return p.hpow < h; });
  if (it != parts_.end() && it->hpow == part.hpow) {
    it->value += part.value;
    if (it->value.is_zero()) parts_.erase(it);
  } else {
    parts_.insert(it, part);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& p : o.parts_) insert(p);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& p : o.parts_) insert({-p.value, p.hpow});
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  Coefficient result;
  for (const auto& a : parts_)
    for (const auto& b : o.parts_) result.insert({a.value * b.value, a.hpow + b.hpow});
  *this = std::move(result);
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient r;
  r.parts_.reserve(parts_.size());
  for (const auto& p : parts_) r.parts_.push_back({-p.value, p.hpow});
  return r;
}

Coefficient Coefficient::conj() const {
  Coefficient r;
  r.parts_.reserve(parts_.size());
  for (const auto& p : parts_) r.parts_.push_back({p.value.conj(), p.hpow});
  return r;
}

Coefficient Coefficient::times_i_hbar(int m) const {
  if (m < 0) throw std::invalid_argument("Coefficient::times_i_hbar: negative power");
  const GaussianRational phase = i_power(m);
  Coefficient r;
  r.parts_.reserve(parts_.size());
  for (const auto& p : parts_) r.parts_.push_back({p.value * phase, p.hpow + m});
  return r;
}

Coefficient Coefficient::div_i_hbar(int m) const {
  if (m < 0) throw std::invalid_argument("Coefficient::div_i_hbar: negative power");
  const GaussianRational phase = i_power(-m);
  Coefficient r;
  r.parts_.reserve(parts_.size());
  for (const auto& p : parts_) {
    if (p.hpow < m)
      throw std::invalid_argument("Coefficient::div_i_hbar: ħ-power underflow");
    r.parts_.push_back({p.value * phase, p.hpow - m});
  }
  return r;
}

Coefficient Coefficient::truncate_hpow(int order) const {
  Coefficient r;
  for (const auto& p : parts_)
    if (p.hpow <= order) r.parts_.push_back(p);
  return r;
}

int Coefficient::max_hpow() const { return parts_.empty() ? -1 : parts_.back().hpow; }

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.parts_.size() != b.parts_.size()) return false;
  for (size_t i = 0; i < a.parts_.size(); ++i) {
    if (a.parts_[i].hpow != b.parts_[i].hpow) return false;
    if (a.parts_[i].value != b.parts_[i].value) return false;
  }
  return true;
}

std::string Coefficient::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " + ";
    out += parts_[i].value.str();
    if (parts_[i].hpow == 1) out += "*h";
    else if (parts_[i].hpow > 1) out += "*h^" + std::to_string(parts_[i].hpow);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

}  // namespace ceq
