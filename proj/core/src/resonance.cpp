#include "ceq/resonance.hpp"

#include <algorithm>
#include <stdexcept>

namespace ceq {

Rational delta_value(int k, int l, int s, int t, const Signature& sig) {
  if (!(k > l && l >= 0 && s >= 0 && t >= 0 && 2 * s <= k && 2 * t <= l))
    throw std::invalid_argument("delta_value: need k > l >= 0, 0 <= 2s <= k, 0 <= 2t <= l");
  const int n = sig.n();
  const long numerator = static_cast<long>(k - l + t - s) * (k + l - 2 * (s + t) + n - 1) +
                         static_cast<long>(s - t) * (k + l + 1) + 2L * (k * t - l * s);
  return Rational(numerator) / Rational(static_cast<long>(n) * (k - l));
}

std::vector<ResonanceEntry> enumerate_sigma(const Signature& sig, int k_max) {
  if (k_max < 1) throw std::invalid_argument("enumerate_sigma: need k_max >= 1");
  std::vector<ResonanceEntry> out;
  for (int k = 1; k <= k_max; ++k)
    for (int l = 0; l < k; ++l)
      for (int s = 0; 2 * s <= k; ++s)
        for (int t = 0; 2 * t <= l; ++t) {
          const bool sigma0 = (s - t >= 0) && (s - t <= k - l);
          out.push_back({k, l, s, t, delta_value(k, l, s, t, sig), sigma0});
        }
  std::sort(out.begin(), out.end(), [](const ResonanceEntry& a, const ResonanceEntry& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return std::tie(a.k, a.l, a.s, a.t) < std::tie(b.k, b.l, b.s, b.t);
  });
  return out;
}

const char* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::Ok: return "OK";
    case ProbeStatus::ResonantConsistent: return "ResonantConsistent";
    case ProbeStatus::Critical: return "Critical";
  }
  return "?";
}

bool ProbeReport::any_critical() const {
  for (const auto& c : cells)
    if (c.status == ProbeStatus::Critical) return true;
  return false;
}

ProbeReport probe_critical(const Signature& sig, const Weights& w, int k_max, int x_degree) {
  if (sig.n() < 2) throw std::invalid_argument("probe_critical: need n >= 2");
  const int n = sig.n();
  ProbeReport report{sig, w, k_max, {}};

  const auto x_exps = multi_indices(n, x_degree);
  for (int k = 0; k <= k_max; ++k) {
    std::vector<std::vector<int>> xi_exps;
    for (const auto& e : multi_indices(n, k)) {
      int total = 0;
      for (int v : e) total += v;
      if (total == k) xi_exps.push_back(e);
    }
    for (int s = 0; 2 * s <= k; ++s) {
      ProbeCell cell{k, s, ProbeStatus::Ok, std::nullopt};
      for (const auto& xe : x_exps) {
        if (cell.status == ProbeStatus::Critical) break;
        for (const auto& xie : xi_exps) {
          const SymbolPolynomial mono =
              SymbolPolynomial::monomial(n, Monomial(xe, xie), Coefficient::one());
          SymbolPolynomial principal = harmonic_project(mono, k, s, sig);
          if (principal.is_zero()) continue;
          std::vector<TraceStep> trace;
          try {
            solve_eigenvector({k, s, principal}, w, sig, &trace);
          } catch (const CriticalResonance& e) {
            cell.status = ProbeStatus::Critical;
            cell.witness.emplace(e.k, e.s, e.l, e.t, e.delta, std::move(principal));
            break;
          }
          if (cell.status == ProbeStatus::Ok)
            for (const auto& step : trace)
              if (step.divisor.is_zero()) {
                cell.status = ProbeStatus::ResonantConsistent;
                break;
              }
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace ceq
