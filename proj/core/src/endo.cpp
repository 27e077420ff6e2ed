#include "ceq/endo.hpp"

#include <ostream>
#include <stdexcept>

namespace ceq {
namespace {

// Falling factorial e(e-1)...(e-k+1).
Rational falling(int e, int k) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= Rational(e - j);
  return r;
}

Rational binomial(int a, int b) {
  Rational r(1);
  for (int j = 1; j <= b; ++j) r *= Rational(a - j + 1, j);
  return r;
}

}  // namespace

EndoOperator::EndoOperator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("EndoOperator: need n >= 1");
}

EndoOperator EndoOperator::identity(int n) {
  EndoOperator e(n);
  e.add_term(EndoTerm::unit(n), Coefficient::one());
  return e;
}

EndoOperator EndoOperator::derivative(int n, VarKind kind, int index) {
  if (index < 0 || index >= n) throw std::invalid_argument("EndoOperator: index out of range");
  EndoOperator e(n);
  EndoTerm t = EndoTerm::unit(n);
  (kind == VarKind::X ? t.dx : t.dxi)[index] = 1;
  e.add_term(t, Coefficient::one());
  return e;
}

EndoOperator EndoOperator::multiplication(const SymbolPolynomial& p) {
  EndoOperator e(p.n());
  for (const auto& [m, c] : p.terms()) {
    EndoTerm t = EndoTerm::unit(p.n());
    t.x = m.x;
    t.xi = m.xi;
    e.add_term(t, c);
  }
  return e;
}

void EndoOperator::add_term(const EndoTerm& t, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EndoOperator& EndoOperator::operator+=(const EndoOperator& o) {
  if (n_ != o.n_) throw std::invalid_argument("EndoOperator::operator+=: mismatched dimension n");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

EndoOperator& EndoOperator::operator-=(const EndoOperator& o) {
  if (n_ != o.n_) throw std::invalid_argument("EndoOperator::operator-=: mismatched dimension n");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

EndoOperator EndoOperator::operator-() const {
  EndoOperator r(n_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

EndoOperator EndoOperator::scaled(const Coefficient& c) const {
  EndoOperator r(n_);
  if (c.is_zero()) return r;
  for (const auto& [t, v] : terms_) r.add_term(t, v * c);
  return r;
}

EndoOperator operator+(EndoOperator a, const EndoOperator& b) { a += b; return a; }
EndoOperator operator-(EndoOperator a, const EndoOperator& b) { a -= b; return a; }

SymbolPolynomial endo_apply(const EndoOperator& op, const SymbolPolynomial& p) {
  if (op.n() != p.n()) throw std::invalid_argument("endo_apply: mismatched dimension n");
  const int n = p.n();
  SymbolPolynomial result(n);
  for (const auto& [t, oc] : op.terms()) {
    for (const auto& [m, pc] : p.terms()) {
      Rational factor(1);
      Monomial out = m;
      bool killed = false;
      for (int i = 0; i < n && !killed; ++i) {
        if (m.x[i] < t.dx[i] || m.xi[i] < t.dxi[i]) {
          killed = true;
          break;
        }
        factor *= falling(m.x[i], t.dx[i]);
        factor *= falling(m.xi[i], t.dxi[i]);
        out.x[i] = m.x[i] - t.dx[i] + t.x[i];
        out.xi[i] = m.xi[i] - t.dxi[i] + t.xi[i];
      }
      if (killed || factor.is_zero()) continue;
      result.add_term(out, oc * pc * Coefficient(factor));
    }
  }
  return result;
}

EndoOperator endo_compose(const EndoOperator& o1, const EndoOperator& o2) {
  if (o1.n() != o2.n()) throw std::invalid_argument("endo_compose: mismatched dimension n");
  const int n = o1.n();
  EndoOperator result(n);
  // x^{a1} xi^{b1} dx^{c1} dxi^{d1} . x^{a2} xi^{b2} dx^{c2} dxi^{d2}:
  // move dx^{c1} past x^{a2} and dxi^{d1} past xi^{b2} by Leibniz.
  for (const auto& [t1, c1] : o1.terms()) {
    for (const auto& [t2, c2] : o2.terms()) {
      // enumerate u <= min(c1_i, a2_i), v <= min(d1_i, b2_i) componentwise
      std::vector<int> umax(n), vmax(n);
      for (int i = 0; i < n; ++i) {
        umax[i] = std::min(t1.dx[i], t2.x[i]);
        vmax[i] = std::min(t1.dxi[i], t2.xi[i]);
      }
      std::vector<int> u(n, 0), v(n, 0);
      while (true) {
        Rational factor(1);
        for (int i = 0; i < n; ++i) {
          if (u[i]) factor *= binomial(t1.dx[i], u[i]) * falling(t2.x[i], u[i]);
          if (v[i]) factor *= binomial(t1.dxi[i], v[i]) * falling(t2.xi[i], v[i]);
        }
        EndoTerm t = EndoTerm::unit(n);
        for (int i = 0; i < n; ++i) {
          t.x[i] = t1.x[i] + t2.x[i] - u[i];
          t.xi[i] = t1.xi[i] + t2.xi[i] - v[i];
          t.dx[i] = t1.dx[i] + t2.dx[i] - u[i];
          t.dxi[i] = t1.dxi[i] + t2.dxi[i] - v[i];
        }
        result.add_term(t, c1 * c2 * Coefficient(factor));
        // odometer over (u, v)
        int pos = 0;
        for (; pos < 2 * n; ++pos) {
          std::vector<int>& vec = pos < n ? u : v;
          const std::vector<int>& cap = pos < n ? umax : vmax;
          const int i = pos < n ? pos : pos - n;
          if (vec[i] < cap[i]) {
            ++vec[i];
            break;
          }
          vec[i] = 0;
        }
        if (pos == 2 * n) break;
      }
    }
  }
  return result;
}

std::string EndoOperator::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  auto var_block = [this](const std::vector<int>& e, const char* name, std::string& s) {
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      s += std::string("*") + name + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  };
  for (const auto& [t, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    var_block(t.x, "x", out);
    var_block(t.xi, "xi", out);
    var_block(t.dx, "Dx", out);
    var_block(t.dxi, "Dxi", out);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const EndoOperator& op) { return os << op.str(); }

}  // namespace ceq
