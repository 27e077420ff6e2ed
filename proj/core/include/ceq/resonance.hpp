#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ceq/harmonic.hpp"
#include "ceq/quantizer.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// One resonance delta_{k,l;s,t} with k > l >= 0, 0 <= 2s <= k, 0 <= 2t <= l.
// in_sigma0 marks membership in Sigma_0 (0 <= s-t <= k-l), the set that can
// host critical values.
struct ResonanceEntry {
  int k, l, s, t;
  Rational delta;
  bool in_sigma0;
};

// delta_{k,l;s,t} =
//   [ (k-l+t-s)(k+l-2(s+t)+n-1) + (s-t)(k+l+1) + 2(kt-ls) ] / (n(k-l)).
// Throws std::invalid_argument on index-constraint violations.
Rational delta_value(int k, int l, int s, int t, const Signature& sig);

// All entries with k <= k_max, deduplicated by (k,l,s,t), sorted by delta
// (then by indices). Requires k_max >= 1.
std::vector<ResonanceEntry> enumerate_sigma(const Signature& sig, int k_max);

enum class ProbeStatus { Ok, ResonantConsistent, Critical };

const char* to_string(ProbeStatus s);

struct ProbeWitness {
  int k, s, l, t;
  Rational delta;
  SymbolPolynomial principal;  // the probed principal symbol that failed

  ProbeWitness(int k_, int s_, int l_, int t_, Rational d, SymbolPolynomial p)
      : k(k_), s(s_), l(l_), t(t_), delta(std::move(d)), principal(std::move(p)) {}
};

struct ProbeCell {
  int k, s;
  ProbeStatus status = ProbeStatus::Ok;
  std::optional<ProbeWitness> witness;
};

struct ProbeReport {
  Signature sig;
  Weights weights;
  int k_max = 0;
  std::vector<ProbeCell> cells;

  bool any_critical() const;
};

// Attempts solve_eigenvector on a spanning set of each (k,s) cell with
// x-monomial coefficients up to x_degree, and reports per cell:
// Ok / ResonantConsistent (zero divisor, zero right side) / Critical
// (zero divisor, nonzero right side — reported with a witness).
ProbeReport probe_critical(const Signature& sig, const Weights& w, int k_max, int x_degree = 2);

}  // namespace ceq
