#pragma once

#include <stdexcept>

#include "ceq/rational.hpp"

namespace ceq {

// Flat diagonal metric of signature (p,q): g_ii = +1 for i < p, -1 otherwise.
// Since g is its own inverse, raising and lowering an index is the same sign
// flip on the q-block.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1)
      throw std::invalid_argument("Signature: need p,q >= 0 and n = p+q >= 1");
  }

  int n() const { return p + q; }

  // g_ii for a 0-based index.
  int metric_sign(int i) const {
    if (i < 0 || i >= n()) throw std::invalid_argument("Signature: index out of range");
    return i < p ? 1 : -1;
  }
  Rational metric(int i) const { return Rational(metric_sign(i)); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q;
  }
};

// Density weights (lambda, mu); the shift delta = mu - lambda is derived so
// the invariant can never drift.
struct Weights {
  Rational lambda;
  Rational mu;

  Weights() = default;
  Weights(Rational l, Rational m) : lambda(std::move(l)), mu(std::move(m)) {}

  Rational delta() const { return mu - lambda; }

  // Symmetric weights around 1/2: lambda + mu = 1 with the given shift.
  static Weights symmetric(const Rational& delta) {
    return Weights((Rational(1) - delta) / Rational(2), (Rational(1) + delta) / Rational(2));
  }
};

}  // namespace ceq
