#include "ceq/polynomial.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ceq {
namespace {

void check_same_n(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": mismatched dimension n");
}

}  // namespace

int Monomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }
int Monomial::xi_degree() const { return std::accumulate(xi.begin(), xi.end(), 0); }

SymbolPolynomial::SymbolPolynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymbolPolynomial: need n >= 1");
}

SymbolPolynomial SymbolPolynomial::constant(int n, Coefficient c) {
  SymbolPolynomial p(n);
  p.add_term(Monomial::unit(n), c);
  return p;
}

SymbolPolynomial SymbolPolynomial::variable(int n, VarKind kind, int index) {
  if (index < 0 || index >= n) throw std::invalid_argument("SymbolPolynomial: index out of range");
  Monomial m = Monomial::unit(n);
  (kind == VarKind::X ? m.x : m.xi)[index] = 1;
  return monomial(n, std::move(m), Coefficient::one());
}

SymbolPolynomial SymbolPolynomial::monomial(int n, Monomial m, Coefficient c) {
  if (static_cast<int>(m.x.size()) != n || static_cast<int>(m.xi.size()) != n)
    throw std::invalid_argument("SymbolPolynomial: exponent vectors must have length n");
  SymbolPolynomial p(n);
  p.add_term(m, c);
  return p;
}

void SymbolPolynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient SymbolPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

SymbolPolynomial& SymbolPolynomial::operator+=(const SymbolPolynomial& o) {
  check_same_n(n_, o.n_, "SymbolPolynomial::operator+=");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymbolPolynomial& SymbolPolynomial::operator-=(const SymbolPolynomial& o) {
  check_same_n(n_, o.n_, "SymbolPolynomial::operator-=");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymbolPolynomial SymbolPolynomial::operator-() const {
  SymbolPolynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SymbolPolynomial& SymbolPolynomial::operator*=(const SymbolPolynomial& o) {
  check_same_n(n_, o.n_, "SymbolPolynomial::operator*=");
  SymbolPolynomial r(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (int i = 0; i < n_; ++i) {
        m.x[i] += mb.x[i];
        m.xi[i] += mb.xi[i];
      }
      r.add_term(m, ca * cb);
    }
  }
  *this = std::move(r);
  return *this;
}

SymbolPolynomial SymbolPolynomial::scaled(const Coefficient& c) const {
  SymbolPolynomial r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

SymbolPolynomial SymbolPolynomial::differentiate(VarKind kind, int index) const {
  if (index < 0 || index >= n_)
    throw std::invalid_argument("SymbolPolynomial::differentiate: index out of range");
  SymbolPolynomial r(n_);
  for (const auto& [m, c] : terms_) {
    const int e = (kind == VarKind::X ? m.x : m.xi)[index];
    if (e == 0) continue;
    Monomial d = m;
    (kind == VarKind::X ? d.x : d.xi)[index] = e - 1;
    r.add_term(d, c * Coefficient(Rational(e)));
  }
  return r;
}

int SymbolPolynomial::x_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.x_degree());
  return deg;
}

int SymbolPolynomial::xi_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.xi_degree());
  return deg;
}

bool SymbolPolynomial::depends_on(VarKind kind) const {
  for (const auto& [m, c] : terms_) {
    const auto& e = (kind == VarKind::X ? m.x : m.xi);
    for (int v : e)
      if (v > 0) return true;
  }
  return false;
}

SymbolPolynomial SymbolPolynomial::xi_part(int k) const {
  SymbolPolynomial r(n_);
  for (const auto& [m, c] : terms_)
    if (m.xi_degree() == k) r.terms_.emplace(m, c);
  return r;
}

std::vector<std::pair<int, SymbolPolynomial>> SymbolPolynomial::xi_degree_split() const {
  std::map<int, SymbolPolynomial> parts;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = parts.try_emplace(m.xi_degree(), n_);
    it->second.terms_.emplace(m, c);
  }
  std::vector<std::pair<int, SymbolPolynomial>> out;
  out.reserve(parts.size());
  for (auto& [k, p] : parts) out.emplace_back(k, std::move(p));
  return out;
}

SymbolPolynomial SymbolPolynomial::origin_part() const {
  SymbolPolynomial r(n_);
  for (const auto& [m, c] : terms_)
    if (m.x_degree() == 0) r.terms_.emplace(m, c);
  return r;
}

SymbolPolynomial SymbolPolynomial::truncate_x_degree(int r) const {
  SymbolPolynomial out(n_);
  for (const auto& [m, c] : terms_)
    if (m.x_degree() <= r) out.terms_.emplace(m, c);
  return out;
}

SymbolPolynomial SymbolPolynomial::conj() const {
  SymbolPolynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
  return r;
}

std::string SymbolPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    for (int i = 0; i < n_; ++i) {
      if (m.x[i] == 1) out += "*x" + std::to_string(i + 1);
      else if (m.x[i] > 1) out += "*x" + std::to_string(i + 1) + "^" + std::to_string(m.x[i]);
    }
    for (int i = 0; i < n_; ++i) {
      if (m.xi[i] == 1) out += "*xi" + std::to_string(i + 1);
      else if (m.xi[i] > 1) out += "*xi" + std::to_string(i + 1) + "^" + std::to_string(m.xi[i]);
    }
  }
  return out;
}

SymbolPolynomial operator+(SymbolPolynomial a, const SymbolPolynomial& b) { a += b; return a; }
SymbolPolynomial operator-(SymbolPolynomial a, const SymbolPolynomial& b) { a -= b; return a; }
SymbolPolynomial operator*(SymbolPolynomial a, const SymbolPolynomial& b) { a *= b; return a; }

std::ostream& operator<<(std::ostream& os, const SymbolPolynomial& p) { return os << p.str(); }

SymbolPolynomial raise_index(const SymbolPolynomial& p, const Signature& sig, VarKind kind,
                             int index) {
  if (index < 0 || index >= p.n()) throw std::invalid_argument("raise_index: index out of range");
  if (sig.n() != p.n()) throw std::invalid_argument("raise_index: mismatched dimension n");
  if (sig.metric_sign(index) == 1) return p;
  SymbolPolynomial r(p.n());
  for (const auto& [m, c] : p.terms()) {
    const int e = (kind == VarKind::X ? m.x : m.xi)[index];
    r.add_term(m, (e % 2 == 0) ? c : -c);
  }
  return r;
}

SymbolPolynomial poisson_bracket(const SymbolPolynomial& p, const SymbolPolynomial& q) {
  if (p.n() != q.n()) throw std::invalid_argument("poisson_bracket: mismatched dimension n");
  SymbolPolynomial r(p.n());
  for (int i = 0; i < p.n(); ++i) {
    r += p.differentiate(VarKind::Xi, i) * q.differentiate(VarKind::X, i);
    r -= p.differentiate(VarKind::X, i) * q.differentiate(VarKind::Xi, i);
  }
  return r;
}

namespace {

void enumerate_indices(int pos, int n, int remaining, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    enumerate_indices(pos + 1, n, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<std::vector<int>> multi_indices(int n, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  enumerate_indices(0, n, max_total, cur, out);
  return out;
}

}  // namespace ceq
