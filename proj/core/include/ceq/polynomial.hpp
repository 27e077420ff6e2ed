#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ceq/scalar.hpp"
#include "ceq/signature.hpp"

namespace ceq {

enum class VarKind { X, Xi };

// Exponent pair of one term: x^{x[0]}...x^{x[n-1]} * xi^{xi[0]}...xi^{xi[n-1]}.
struct Monomial {
  std::vector<int> x;
  std::vector<int> xi;

  Monomial() = default;
  Monomial(std::vector<int> xe, std::vector<int> xie) : x(std::move(xe)), xi(std::move(xie)) {}
  static Monomial unit(int n) { return Monomial(std::vector<int>(n, 0), std::vector<int>(n, 0)); }

  int x_degree() const;
  int xi_degree() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.x == b.x && a.xi == b.xi; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.x != b.x ? a.x < b.x : a.xi < b.xi;
  }
};

// Exact multinomial in x^1..x^n, xi_1..xi_n with Coefficient scalars.
// Under the normal-ordering identification the same structure also stores the
// sigma-symbol of a differential operator (xi-exponents = derivative orders).
class SymbolPolynomial {
 public:
  explicit SymbolPolynomial(int n);

  static SymbolPolynomial constant(int n, Coefficient c);
  static SymbolPolynomial variable(int n, VarKind kind, int index);  // 0-based index
  static SymbolPolynomial monomial(int n, Monomial m, Coefficient c);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Coefficient>& terms() const { return terms_; }

  // Accumulates c into the term for m; drops the term when it cancels.
  void add_term(const Monomial& m, const Coefficient& c);

  Coefficient coefficient(const Monomial& m) const;

  SymbolPolynomial& operator+=(const SymbolPolynomial& o);
  SymbolPolynomial& operator-=(const SymbolPolynomial& o);
  SymbolPolynomial operator-() const;
  SymbolPolynomial& operator*=(const SymbolPolynomial& o);

  SymbolPolynomial scaled(const Coefficient& c) const;
  SymbolPolynomial scaled(const Rational& r) const { return scaled(Coefficient(r)); }

  // Exact formal partial derivative.
  SymbolPolynomial differentiate(VarKind kind, int index) const;

  int x_degree() const;   // max over terms, -1 when zero
  int xi_degree() const;  // max over terms, -1 when zero
  bool depends_on(VarKind kind) const;

  // The xi-homogeneous part of degree k.
  SymbolPolynomial xi_part(int k) const;
  // All nonzero xi-homogeneous parts, ascending in k. Their sum is *this.
  std::vector<std::pair<int, SymbolPolynomial>> xi_degree_split() const;

  // Terms with x-degree zero (the value of the coefficients at the origin).
  SymbolPolynomial origin_part() const;
  // Drops every term of x-degree > r (jet truncation).
  SymbolPolynomial truncate_x_degree(int r) const;

  SymbolPolynomial conj() const;  // i -> -i on every coefficient

  std::string str() const;

  friend bool operator==(const SymbolPolynomial& a, const SymbolPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymbolPolynomial& a, const SymbolPolynomial& b) { return !(a == b); }

 private:
  int n_;
  std::map<Monomial, Coefficient> terms_;
};

SymbolPolynomial operator+(SymbolPolynomial a, const SymbolPolynomial& b);
SymbolPolynomial operator-(SymbolPolynomial a, const SymbolPolynomial& b);
SymbolPolynomial operator*(SymbolPolynomial a, const SymbolPolynomial& b);

std::ostream& operator<<(std::ostream& os, const SymbolPolynomial& p);

// Reinterprets the given index position of P as metric-raised (or lowered:
// g is involutive, so the two coincide). Each term is scaled by
// g_ii^(exponent of that variable); applying it twice is the identity.
SymbolPolynomial raise_index(const SymbolPolynomial& p, const Signature& sig, VarKind kind,
                             int index);

// {P,Q} = d_{xi_i}P d_i Q - d_i P d_{xi_i} Q.
SymbolPolynomial poisson_bracket(const SymbolPolynomial& p, const SymbolPolynomial& q);

// All multi-indices alpha in n variables with |alpha| <= max_total.
std::vector<std::vector<int>> multi_indices(int n, int max_total);

}  // namespace ceq
