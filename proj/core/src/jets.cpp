#include "ceq/jets.hpp"

#include <stdexcept>

namespace ceq {
namespace {

void require_real_x_only(const SymbolPolynomial& p) {
  if (p.depends_on(VarKind::Xi))
    throw std::invalid_argument("TaylorJet: body must be a function of x only");
  for (const auto& [m, c] : p.terms())
    if (!c.is_real_constant())
      throw std::invalid_argument("TaylorJet: coefficients must be plain rationals");
}

Rational real_value(const Coefficient& c) { return c.at_hpow(0).re; }

}  // namespace

TaylorJet::TaylorJet(int n, int order) : order_(order), body_(n) {
  if (order < 0) throw std::invalid_argument("TaylorJet: order must be >= 0");
}

TaylorJet::TaylorJet(SymbolPolynomial p, int order) : order_(order), body_(p.n()) {
  if (order < 0) throw std::invalid_argument("TaylorJet: order must be >= 0");
  require_real_x_only(p);
  body_ = p.truncate_x_degree(order);
}

TaylorJet TaylorJet::constant(int n, int order, const Rational& value) {
  TaylorJet j(n, order);
  if (!value.is_zero()) j.body_ = SymbolPolynomial::constant(n, Coefficient(value));
  return j;
}

Rational TaylorJet::value_at_origin() const {
  return real_value(body_.coefficient(Monomial::unit(n())));
}

Rational TaylorJet::coefficient(const std::vector<int>& x_exponents) const {
  return real_value(body_.coefficient(Monomial(x_exponents, std::vector<int>(n(), 0))));
}

void TaylorJet::set_coefficient(const std::vector<int>& x_exponents, const Rational& value) {
  const Monomial m(x_exponents, std::vector<int>(n(), 0));
  if (m.x_degree() > order_)
    throw std::invalid_argument("TaylorJet: coefficient beyond truncation order");
  const Coefficient old = body_.coefficient(m);
  body_.add_term(m, Coefficient(value) - old);
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& o) {
  order_ = std::min(order_, o.order_);
  body_ = (body_ + o.body_).truncate_x_degree(order_);
  return *this;
}

TaylorJet& TaylorJet::operator-=(const TaylorJet& o) {
  order_ = std::min(order_, o.order_);
  body_ = (body_ - o.body_).truncate_x_degree(order_);
  return *this;
}

TaylorJet& TaylorJet::operator*=(const TaylorJet& o) {
  order_ = std::min(order_, o.order_);
  body_ = (body_ * o.body_).truncate_x_degree(order_);
  return *this;
}

TaylorJet TaylorJet::scaled(const Rational& r) const {
  TaylorJet out(n(), order_);
  out.body_ = body_.scaled(r);
  return out;
}

TaylorJet TaylorJet::inverse() const {
  const Rational c0 = value_at_origin();
  if (c0.is_zero()) throw std::invalid_argument("TaylorJet::inverse: zero constant term");
  // 1/(c0(1+u)) = (1/c0) sum (-u)^m with u = body/c0 - 1.
  SymbolPolynomial u = body_.scaled(Rational(1) / c0);
  u.add_term(Monomial::unit(n()), Coefficient(Rational(-1)));
  SymbolPolynomial sum = SymbolPolynomial::constant(n(), Coefficient::one());
  SymbolPolynomial power = sum;
  for (int m = 1; m <= order_; ++m) {
    power = (power * u).truncate_x_degree(order_);
    if (power.is_zero()) break;
    sum += (m % 2 == 0) ? power : -power;
  }
  TaylorJet out(n(), order_);
  out.body_ = sum.scaled(Rational(1) / c0);
  return out;
}

TaylorJet TaylorJet::pow(const Rational& exponent) const {
  if (value_at_origin() != Rational(1))
    throw std::invalid_argument("TaylorJet::pow: constant term must be 1");
  SymbolPolynomial u = body_;
  u.add_term(Monomial::unit(n()), Coefficient(Rational(-1)));
  SymbolPolynomial sum = SymbolPolynomial::constant(n(), Coefficient::one());
  SymbolPolynomial power = sum;
  Rational binom(1);
  for (int m = 1; m <= order_; ++m) {
    power = (power * u).truncate_x_degree(order_);
    if (power.is_zero()) break;
    binom *= (exponent - Rational(m - 1)) / Rational(m);
    if (binom.is_zero()) break;  // integer exponent exhausted
    sum += power.scaled(binom);
  }
  TaylorJet out(n(), order_);
  out.body_ = sum;
  return out;
}

TaylorJet TaylorJet::derivative(int index) const {
  if (order_ == 0)
    throw std::invalid_argument("TaylorJet::derivative: jet order exhausted");
  TaylorJet out(n(), order_ - 1);
  out.body_ = body_.differentiate(VarKind::X, index).truncate_x_degree(order_ - 1);
  return out;
}

TaylorJet operator+(TaylorJet a, const TaylorJet& b) { a += b; return a; }
TaylorJet operator-(TaylorJet a, const TaylorJet& b) { a -= b; return a; }
TaylorJet operator*(TaylorJet a, const TaylorJet& b) { a *= b; return a; }

MetricJet::MetricJet(TaylorJet f, Signature s) : conformal_factor(std::move(f)), sig(s) {
  if (conformal_factor.n() != sig.n())
    throw std::invalid_argument("MetricJet: mismatched dimension n");
  if (conformal_factor.value_at_origin() != Rational(1))
    throw std::invalid_argument("MetricJet: conformal factor must have F(0) = 1");
}

TaylorJet MetricJet::metric_component(int i) const {
  return conformal_factor.scaled(sig.metric(i));
}

TaylorJet MetricJet::inverse_metric_component(int i) const {
  return conformal_factor.inverse().scaled(sig.metric(i));
}

Rational curvature_at_origin(const MetricJet& m) {
  const int n = m.sig.n();
  const int r = m.order();
  if (r < 2) throw std::invalid_argument("curvature_at_origin: need jet order >= 2");

  std::vector<TaylorJet> g, ginv;
  g.reserve(n);
  ginv.reserve(n);
  const TaylorJet finv = m.conformal_factor.inverse();
  for (int i = 0; i < n; ++i) {
    g.push_back(m.metric_component(i));
    ginv.push_back(finv.scaled(m.sig.metric(i)));
  }

  // Gamma^k_ij = 1/2 g^{kk} (d_i g_jj delta_jk + d_j g_ii delta_ik - d_k g_ii delta_ij)
  const TaylorJet zero(n, r - 1);
  std::vector<std::vector<std::vector<TaylorJet>>> gamma(
      n, std::vector<std::vector<TaylorJet>>(n, std::vector<TaylorJet>(n, zero)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        TaylorJet sum(n, r - 1);
        if (j == k) sum += g[j].derivative(i);
        if (i == k) sum += g[i].derivative(j);
        if (i == j) sum -= g[i].derivative(k);
        gamma[k][i][j] = (ginv[k] * sum).scaled(Rational(1, 2));
      }

  // Ricci_{sigma nu} = d_rho Gamma^rho_{nu sigma} - d_nu Gamma^rho_{rho sigma}
  //                  + Gamma^rho_{rho lam} Gamma^lam_{nu sigma}
  //                  - Gamma^rho_{nu lam} Gamma^lam_{rho sigma}
  Rational scalar(0);
  for (int s = 0; s < n; ++s) {
    TaylorJet ric(n, r - 2);
    for (int rho = 0; rho < n; ++rho) {
      ric += gamma[rho][s][s].derivative(rho);
      ric -= gamma[rho][rho][s].derivative(s);
      for (int lam = 0; lam < n; ++lam) {
        ric += gamma[rho][rho][lam] * gamma[lam][s][s];
        ric -= gamma[rho][s][lam] * gamma[lam][rho][s];
      }
    }
    scalar += (ginv[s] * ric).value_at_origin();
  }
  return scalar;
}

}  // namespace ceq
