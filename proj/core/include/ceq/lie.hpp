#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ceq/diff_op.hpp"
#include "ceq/polynomial.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// Polynomial vector field X = X^i d_i, stored through its components
// (x-polynomials). The associated symbol X^i xi_i has xi-degree exactly 1
// unless X = 0.
class VectorField {
 public:
  explicit VectorField(int n);

  static VectorField zero(int n) { return VectorField(n); }

  int n() const { return n_; }
  const SymbolPolynomial& component(int i) const;
  void set_component(int i, SymbolPolynomial p);

  bool is_zero() const;

  // X^i xi_i as a symbol.
  SymbolPolynomial to_symbol() const;
  // Div(X) = d_i X^i in the fixed trivialization Vol = |dx^1...dx^n|.
  SymbolPolynomial divergence() const;

  VectorField& operator+=(const VectorField& o);
  VectorField scaled(const Rational& r) const;

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.n_ == b.n_ && a.comps_ == b.comps_;
  }

 private:
  int n_;
  std::vector<SymbolPolynomial> comps_;
};

VectorField operator+(VectorField a, const VectorField& b);

// [X,Y]^i = X(Y^i) - Y(X^i).
VectorField vf_bracket(const VectorField& x, const VectorField& y);

// Lie derivative of a lambda-density (trivialized): X(f) + lambda Div(X) f.
SymbolPolynomial density_lie(const VectorField& x, const SymbolPolynomial& f,
                             const Rational& lambda);

// Action on delta-weighted symbols via the Hamiltonian vector field:
// d_{xi_i}X d_i P - d_i X d_{xi_i} P + delta D(X) P.
SymbolPolynomial symbol_lie(const VectorField& x, const SymbolPolynomial& p, const Rational& delta);

// sigma-symbol of the Lie derivative of lambda-densities, X^i xi_i + lambda Div(X).
OperatorSymbol density_lie_operator(const VectorField& x, const Rational& lambda);

// Action on operators: sigma-symbol of L^mu_X o A - A o L^lambda_X.
OperatorSymbol operator_lie(const VectorField& x, const OperatorSymbol& a, const Weights& w);

// The conformal Lie algebra o(p+1,q+1) in an adapted chart: translations X_i,
// rotations/boosts X_ij (i<j), the dilation X_0 and the inversions Xbar_i,
// together with the dual basis for the Killing form B(X,Y) = -1/2 Tr(XY) and
// the Gram matrix of pairings.
struct ConformalBasis {
  Signature sig;
  std::vector<VectorField> generators;
  std::vector<VectorField> duals;
  std::vector<std::string> names;  // "X_i:1", "X_ij:1,2", "X0", "Xbar_i:1" (1-based)
  std::vector<std::vector<Rational>> gram;

  int size() const { return static_cast<int>(generators.size()); }
};

// Throws std::invalid_argument when n < 2.
ConformalBasis conformal_generators(const Signature& sig);

// Index of a generator by its stable string id; -1 when unknown.
int generator_index(const ConformalBasis& basis, std::string_view id);

}  // namespace ceq
