#include "ceq/lie.hpp"

#include <stdexcept>

namespace ceq {
namespace {

// Element of Q(sqrt 2): a + b*sqrt(2). The (n+2)x(n+2) matrix realization of
// the conformal generators carries sqrt(2) blocks; every Killing pairing of
// basis elements comes out rational.
struct Q2 {
  Rational a;
  Rational b;

  Q2() = default;
  Q2(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  Q2& operator+=(const Q2& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend Q2 operator*(const Q2& u, const Q2& v) {
    return Q2(u.a * v.a + Rational(2) * u.b * v.b, u.a * v.b + u.b * v.a);
  }
};

using Q2Matrix = std::vector<std::vector<Q2>>;

Q2Matrix zero_matrix(int size) { return Q2Matrix(size, std::vector<Q2>(size)); }

// B(X,Y) = -1/2 Tr(XY); asserts the sqrt(2) part cancels.
Rational killing_pairing(const Q2Matrix& x, const Q2Matrix& y) {
  const int size = static_cast<int>(x.size());
  Q2 trace;
  for (int i = 0; i < size; ++i)
    for (int k = 0; k < size; ++k) trace += x[i][k] * y[k][i];
  if (!trace.b.is_zero())
    throw std::logic_error("killing_pairing: irrational trace");
  return Rational(-1, 2) * trace.a;
}

SymbolPolynomial x_var(int n, int i) { return SymbolPolynomial::variable(n, VarKind::X, i); }

}  // namespace

VectorField::VectorField(int n) : n_(n), comps_(n, SymbolPolynomial(n)) {
  if (n < 1) throw std::invalid_argument("VectorField: need n >= 1");
}

const SymbolPolynomial& VectorField::component(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("VectorField: index out of range");
  return comps_[i];
}

void VectorField::set_component(int i, SymbolPolynomial p) {
  if (i < 0 || i >= n_) throw std::invalid_argument("VectorField: index out of range");
  if (p.n() != n_) throw std::invalid_argument("VectorField: mismatched dimension n");
  if (p.depends_on(VarKind::Xi))
    throw std::invalid_argument("VectorField: components must be functions of x only");
  comps_[i] = std::move(p);
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

SymbolPolynomial VectorField::to_symbol() const {
  SymbolPolynomial s(n_);
  for (int i = 0; i < n_; ++i) s += comps_[i] * SymbolPolynomial::variable(n_, VarKind::Xi, i);
  return s;
}

SymbolPolynomial VectorField::divergence() const {
  SymbolPolynomial d(n_);
  for (int i = 0; i < n_; ++i) d += comps_[i].differentiate(VarKind::X, i);
  return d;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (n_ != o.n_) throw std::invalid_argument("VectorField::operator+=: mismatched dimension n");
  for (int i = 0; i < n_; ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField VectorField::scaled(const Rational& r) const {
  VectorField v(n_);
  for (int i = 0; i < n_; ++i) v.comps_[i] = comps_[i].scaled(r);
  return v;
}

VectorField operator+(VectorField a, const VectorField& b) { a += b; return a; }

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  if (x.n() != y.n()) throw std::invalid_argument("vf_bracket: mismatched dimension n");
  const int n = x.n();
  VectorField r(n);
  for (int i = 0; i < n; ++i) {
    SymbolPolynomial c(n);
    for (int j = 0; j < n; ++j) {
      c += x.component(j) * y.component(i).differentiate(VarKind::X, j);
      c -= y.component(j) * x.component(i).differentiate(VarKind::X, j);
    }
    r.set_component(i, c);
  }
  return r;
}

SymbolPolynomial density_lie(const VectorField& x, const SymbolPolynomial& f,
                             const Rational& lambda) {
  if (x.n() != f.n()) throw std::invalid_argument("density_lie: mismatched dimension n");
  if (f.depends_on(VarKind::Xi))
    throw std::invalid_argument("density_lie: argument must be a function of x only");
  SymbolPolynomial r(f.n());
  for (int i = 0; i < f.n(); ++i) r += x.component(i) * f.differentiate(VarKind::X, i);
  r += x.divergence().scaled(lambda) * f;
  return r;
}

SymbolPolynomial symbol_lie(const VectorField& x, const SymbolPolynomial& p,
                            const Rational& delta) {
  if (x.n() != p.n()) throw std::invalid_argument("symbol_lie: mismatched dimension n");
  const int n = p.n();
  SymbolPolynomial r(n);
  for (int i = 0; i < n; ++i) {
    r += x.component(i) * p.differentiate(VarKind::X, i);
    SymbolPolynomial dix(n);  // d_i of the symbol X^j xi_j
    for (int j = 0; j < n; ++j)
      dix += x.component(j).differentiate(VarKind::X, i) *
             SymbolPolynomial::variable(n, VarKind::Xi, j);
    r -= dix * p.differentiate(VarKind::Xi, i);
  }
  r += x.divergence().scaled(delta) * p;
  return r;
}

OperatorSymbol density_lie_operator(const VectorField& x, const Rational& lambda) {
  return OperatorSymbol(x.to_symbol() + x.divergence().scaled(lambda));
}

OperatorSymbol operator_lie(const VectorField& x, const OperatorSymbol& a, const Weights& w) {
  const OperatorSymbol lmu = density_lie_operator(x, w.mu);
  const OperatorSymbol llambda = density_lie_operator(x, w.lambda);
  return OperatorSymbol(compose(lmu, a).body() - compose(a, llambda).body());
}

ConformalBasis conformal_generators(const Signature& sig) {
  const int n = sig.n();
  if (n < 2) throw std::invalid_argument("conformal_generators: unsupported dimension, need n >= 2");

  ConformalBasis basis;
  basis.sig = sig;
  std::vector<Q2Matrix> mats;
  const int size = n + 2;

  // x_j x^j = sum_j eta_j (x^j)^2
  SymbolPolynomial xx(n);
  for (int j = 0; j < n; ++j) xx += (x_var(n, j) * x_var(n, j)).scaled(sig.metric(j));

  // Translations X_i = d_i.
  for (int i = 0; i < n; ++i) {
    VectorField v(n);
    v.set_component(i, SymbolPolynomial::constant(n, Coefficient::one()));
    basis.generators.push_back(v);
    basis.names.push_back("X_i:" + std::to_string(i + 1));
    Q2Matrix m = zero_matrix(size);
    m[i][n] = Q2(Rational(0), Rational(-1));
    m[n + 1][i] = Q2(Rational(0), sig.metric(i));
    mats.push_back(std::move(m));
  }
  // Rotations/boosts X_ij = x_i d_j - x_j d_i, i < j, with x_i = g_ii x^i.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VectorField v(n);
      v.set_component(j, x_var(n, i).scaled(sig.metric(i)));
      v.set_component(i, x_var(n, j).scaled(-sig.metric(j)));
      basis.generators.push_back(v);
      basis.names.push_back("X_ij:" + std::to_string(i + 1) + "," + std::to_string(j + 1));
      Q2Matrix m = zero_matrix(size);
      m[j][i] = Q2(sig.metric(i), Rational(0));
      m[i][j] = Q2(-sig.metric(j), Rational(0));
      mats.push_back(std::move(m));
    }
  }
  // Dilation X_0 = x^i d_i.
  {
    VectorField v(n);
    for (int m = 0; m < n; ++m) v.set_component(m, x_var(n, m));
    basis.generators.push_back(v);
    basis.names.push_back("X0");
    Q2Matrix m = zero_matrix(size);
    m[n][n] = Q2(Rational(-1), Rational(0));
    m[n + 1][n + 1] = Q2(Rational(1), Rational(0));
    mats.push_back(std::move(m));
  }
  // Inversions Xbar_i = x_j x^j d_i - 2 x_i x^j d_j.
  for (int i = 0; i < n; ++i) {
    VectorField v(n);
    for (int m = 0; m < n; ++m) {
      SymbolPolynomial c(n);
      if (m == i) c += xx;
      c -= (x_var(n, i) * x_var(n, m)).scaled(Rational(2) * sig.metric(i));
      v.set_component(m, c);
    }
    basis.generators.push_back(v);
    basis.names.push_back("Xbar_i:" + std::to_string(i + 1));
    Q2Matrix m = zero_matrix(size);
    m[i][n + 1] = Q2(Rational(0), Rational(1));
    m[n][i] = Q2(Rational(0), -sig.metric(i));
    mats.push_back(std::move(m));
  }

  const int count = basis.size();
  basis.gram.assign(count, std::vector<Rational>(count));
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) basis.gram[a][b] = killing_pairing(mats[a], mats[b]);

  // Dual basis w.r.t. the Killing form:
  //   X^i = -1/2 g^{ij} Xbar_j, X^{ij} = g^{ik} g^{jl} X_kl,
  //   X^0 = -X_0,               Xbar^i = -1/2 g^{ij} X_j.
  const int rot_offset = n;
  const int dil_offset = n + n * (n - 1) / 2;
  const int inv_offset = dil_offset + 1;
  for (int i = 0; i < n; ++i)
    basis.duals.push_back(basis.generators[inv_offset + i].scaled(Rational(-1, 2) * sig.metric(i)));
  {
    int idx = rot_offset;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        basis.duals.push_back(basis.generators[idx++].scaled(sig.metric(i) * sig.metric(j)));
  }
  basis.duals.push_back(basis.generators[dil_offset].scaled(Rational(-1)));
  for (int i = 0; i < n; ++i)
    basis.duals.push_back(basis.generators[i].scaled(Rational(-1, 2) * sig.metric(i)));

  return basis;
}

int generator_index(const ConformalBasis& basis, std::string_view id) {
  for (int i = 0; i < basis.size(); ++i)
    if (basis.names[i] == id) return i;
  return -1;
}

}  // namespace ceq
