#include "ceq/diff_op.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

namespace ceq {
namespace {

// result += coeff * dA * dB, recursing over coordinates and derivative orders
// so that each partial derivative is computed once.
void compose_rec(int i, int n, const SymbolPolynomial& da, const SymbolPolynomial& db,
                 const Rational& coeff, SymbolPolynomial& result) {
  if (da.is_zero() || db.is_zero()) return;
  if (i == n) {
    result += (da * db).scaled(coeff);
    return;
  }
  SymbolPolynomial a = da;
  SymbolPolynomial b = db;
  Rational c = coeff;
  for (int m = 0;; ++m) {
    if (m > 0) {
      a = a.differentiate(VarKind::Xi, i);
      if (a.is_zero()) break;
      b = b.differentiate(VarKind::X, i);
      if (b.is_zero()) break;
      c /= Rational(m);
    }
    compose_rec(i + 1, n, a, b, c, result);
  }
}

}  // namespace

SymbolPolynomial apply(const OperatorSymbol& a, const SymbolPolynomial& f) {
  if (a.n() != f.n()) throw std::invalid_argument("apply: mismatched dimension n");
  if (f.depends_on(VarKind::Xi))
    throw std::invalid_argument("apply: argument must be a function of x only");
  SymbolPolynomial result(f.n());
  for (const auto& [m, c] : a.body().terms()) {
    // m.xi is the derivative multi-index, m.x the coefficient monomial.
    SymbolPolynomial df = f;
    for (int i = 0; i < f.n() && !df.is_zero(); ++i)
      for (int r = 0; r < m.xi[i] && !df.is_zero(); ++r) df = df.differentiate(VarKind::X, i);
    if (df.is_zero()) continue;
    result += df.scaled(c) * SymbolPolynomial::monomial(f.n(), Monomial(m.x, std::vector<int>(f.n(), 0)),
                                                        Coefficient::one());
  }
  return result;
}

OperatorSymbol compose(const OperatorSymbol& a, const OperatorSymbol& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: mismatched dimension n");
  SymbolPolynomial result(a.n());
  compose_rec(0, a.n(), a.body(), b.body(), Rational(1), result);
  return OperatorSymbol(result);
}

OperatorSymbol adjoint(const OperatorSymbol& a) {
  const int n = a.n();
  // Group the body by derivative multi-index alpha: A = sum_alpha A_alpha(x) d^alpha.
  std::map<std::vector<int>, SymbolPolynomial> blocks;
  for (const auto& [m, c] : a.body().terms()) {
    auto [it, inserted] = blocks.try_emplace(m.xi, n);
    it->second.add_term(Monomial(m.x, std::vector<int>(n, 0)), c);
  }
  SymbolPolynomial result(n);
  for (const auto& [alpha, coeff_poly] : blocks) {
    int order = 0;
    for (int e : alpha) order += e;
    const OperatorSymbol deriv(
        SymbolPolynomial::monomial(n, Monomial(std::vector<int>(n, 0), alpha), Coefficient::one()));
    SymbolPolynomial term = compose(deriv, OperatorSymbol(coeff_poly.conj())).body();
    result += (order % 2 == 0) ? term : -term;
  }
  return OperatorSymbol(result);
}

std::ostream& operator<<(std::ostream& os, const OperatorSymbol& a) {
  return os << "op[" << a.body() << "]";
}

}  // namespace ceq
