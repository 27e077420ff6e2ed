#pragma once

#include <string>
#include <utility>

#include "ceq/endo.hpp"
#include "ceq/jets.hpp"
#include "ceq/polynomial.hpp"
#include "ceq/quantizer.hpp"
#include "ceq/resonance.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// JSON wire formats (all rationals as "num/den" strings, ħ-powers as
// integers, term lists canonically sorted):
//   polynomial  {"n":..,"p":..,"q":..,
//                "terms":[{"x":[e1..en],"xi":[f1..fn],
//                          "c":[["re","im",hpow],...]},...]}
//               plus "role":"operator" for operator documents ("symbol" is
//               the default and stays implicit, so decode/encode round-trips
//               reproduce plain symbol documents up to term ordering)
//   jet         {"r":..,"coeffs":[{"x":[..],"v":"num/den"},...]}
//   endo        {"n":..,"p":..,"q":..,
//                "terms":[{"x":[..],"xi":[..],"dx":[..],"dxi":[..],
//                          "c":[...]},...]}
// Decoding throws std::invalid_argument on any schema violation.

struct PolynomialDoc {
  Signature sig;
  SymbolPolynomial poly;
  std::string role = "symbol";

  PolynomialDoc() : sig(1, 0), poly(1) {}
};

std::string encode_polynomial(const SymbolPolynomial& p, const Signature& sig,
                              const std::string& role = "symbol");
PolynomialDoc decode_polynomial(const std::string& text);

std::string encode_jet(const TaylorJet& jet);
TaylorJet decode_jet(const std::string& text);

std::string encode_endo(const EndoOperator& op, const Signature& sig);

std::string encode_resonances(const std::vector<ResonanceEntry>& entries);
std::string encode_probe_report(const ProbeReport& report);

// {"P": polynomial, "Q": polynomial}; both must share (n,p,q).
std::pair<PolynomialDoc, PolynomialDoc> decode_symbol_pair(const std::string& text);

std::string encode_critical_resonance(const CriticalResonance& e);

}  // namespace ceq
