#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ceq/polynomial.hpp"

namespace ceq {

// One normal-ordered word x^a xi^b d_x^c d_xi^d.
struct EndoTerm {
  std::vector<int> x;
  std::vector<int> xi;
  std::vector<int> dx;
  std::vector<int> dxi;

  static EndoTerm unit(int n) {
    return {std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0),
            std::vector<int>(n, 0)};
  }

  friend bool operator==(const EndoTerm& a, const EndoTerm& b) {
    return a.x == b.x && a.xi == b.xi && a.dx == b.dx && a.dxi == b.dxi;
  }
  friend bool operator<(const EndoTerm& a, const EndoTerm& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.xi != b.xi) return a.xi < b.xi;
    if (a.dx != b.dx) return a.dx < b.dx;
    return a.dxi < b.dxi;
  }
};

// Element of End_diff: a polynomial operator in x, xi, d_x, d_xi acting on
// symbols, kept in canonical normal order (multiplications left of all
// derivatives). Equality of endomorphisms is equality of normal forms.
class EndoOperator {
 public:
  explicit EndoOperator(int n);

  static EndoOperator zero(int n) { return EndoOperator(n); }
  static EndoOperator identity(int n);
  static EndoOperator derivative(int n, VarKind kind, int index);
  // Multiplication operator by a polynomial.
  static EndoOperator multiplication(const SymbolPolynomial& p);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<EndoTerm, Coefficient>& terms() const { return terms_; }

  void add_term(const EndoTerm& t, const Coefficient& c);

  EndoOperator& operator+=(const EndoOperator& o);
  EndoOperator& operator-=(const EndoOperator& o);
  EndoOperator operator-() const;
  EndoOperator scaled(const Coefficient& c) const;
  EndoOperator scaled(const Rational& r) const { return scaled(Coefficient(r)); }

  std::string str() const;

  friend bool operator==(const EndoOperator& a, const EndoOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const EndoOperator& a, const EndoOperator& b) { return !(a == b); }

 private:
  int n_;
  std::map<EndoTerm, Coefficient> terms_;
};

EndoOperator operator+(EndoOperator a, const EndoOperator& b);
EndoOperator operator-(EndoOperator a, const EndoOperator& b);

// Exact application in normal order.
SymbolPolynomial endo_apply(const EndoOperator& op, const SymbolPolynomial& p);

// Normal form of o1 o o2 (Leibniz reordering of the inner derivative block
// past the multiplication block of o2).
EndoOperator endo_compose(const EndoOperator& o1, const EndoOperator& o2);

inline EndoOperator endo_commutator(const EndoOperator& a, const EndoOperator& b) {
  return endo_compose(a, b) - endo_compose(b, a);
}
inline EndoOperator endo_anticommutator(const EndoOperator& a, const EndoOperator& b) {
  return endo_compose(a, b) + endo_compose(b, a);
}

std::ostream& operator<<(std::ostream& os, const EndoOperator& op);

}  // namespace ceq
