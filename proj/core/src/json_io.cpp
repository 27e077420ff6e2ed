#include "ceq/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ceq {
namespace {

using nlohmann::json;

json rational_str(const Rational& r) { return r.str(); }

Rational parse_rational(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a rational string");
  const Rational r = Rational::parse(j.get<std::string>());
  return r;
}

std::vector<int> parse_exponents(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(std::string(what) + ": expected an exponent array of length n");
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number_integer() || j[i].get<int>() < 0)
      throw std::invalid_argument(std::string(what) + ": exponents must be non-negative integers");
    e[i] = j[i].get<int>();
  }
  return e;
}

json encode_coefficient(const Coefficient& c) {
  json parts = json::array();
  for (const auto& p : c.parts())
    parts.push_back(json::array({rational_str(p.value.re), rational_str(p.value.im), p.hpow}));
  return parts;
}

Coefficient parse_coefficient(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient: expected an array");
  Coefficient c;
  for (const auto& part : j) {
    if (!part.is_array() || part.size() != 3)
      throw std::invalid_argument("coefficient: expected [re, im, hpow] triples");
    if (!part[2].is_number_integer() || part[2].get<int>() < 0)
      throw std::invalid_argument("coefficient: hpow must be a non-negative integer");
    c += Coefficient(GaussianRational(parse_rational(part[0], "re"), parse_rational(part[1], "im")),
                     part[2].get<int>());
  }
  return c;
}

Signature parse_signature(const json& j) {
  if (!j.contains("n") || !j.contains("p") || !j.contains("q"))
    throw std::invalid_argument("document: missing n/p/q");
  const int n = j.at("n").get<int>();
  const int p = j.at("p").get<int>();
  const int q = j.at("q").get<int>();
  if (p < 0 || q < 0 || p + q != n)
    throw std::invalid_argument("document: need p,q >= 0 with p + q = n");
  return Signature(p, q);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

PolynomialDoc decode_polynomial_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial: expected an object");
  PolynomialDoc doc;
  doc.sig = parse_signature(j);
  doc.poly = SymbolPolynomial(doc.sig.n());
  if (j.contains("role")) doc.role = j.at("role").get<std::string>();
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("polynomial: missing terms array");
  for (const auto& t : j.at("terms")) {
    const Monomial m(parse_exponents(t.at("x"), doc.sig.n(), "term.x"),
                     parse_exponents(t.at("xi"), doc.sig.n(), "term.xi"));
    doc.poly.add_term(m, parse_coefficient(t.at("c")));
  }
  return doc;
}

}  // namespace

std::string encode_polynomial(const SymbolPolynomial& p, const Signature& sig,
                              const std::string& role) {
  json doc;
  doc["n"] = sig.n();
  doc["p"] = sig.p;
  doc["q"] = sig.q;
  if (role != "symbol") doc["role"] = role;
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["x"] = m.x;
    t["xi"] = m.xi;
    t["c"] = encode_coefficient(c);
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

PolynomialDoc decode_polynomial(const std::string& text) {
  return decode_polynomial_json(parse_text(text));
}

std::string encode_jet(const TaylorJet& jet) {
  json doc;
  doc["r"] = jet.order();
  json coeffs = json::array();
  for (const auto& [m, c] : jet.body().terms()) {
    json entry;
    entry["x"] = m.x;
    entry["v"] = rational_str(c.at_hpow(0).re);
    coeffs.push_back(std::move(entry));
  }
  doc["coeffs"] = std::move(coeffs);
  return doc.dump();
}

TaylorJet decode_jet(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("r") || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw std::invalid_argument("jet: expected {\"r\":..,\"coeffs\":[...]}");
  const int r = j.at("r").get<int>();
  const auto& coeffs = j.at("coeffs");
  int n = -1;
  if (j.contains("n")) n = j.at("n").get<int>();
  else if (!coeffs.empty() && coeffs[0].contains("x")) n = static_cast<int>(coeffs[0].at("x").size());
  if (n < 1) throw std::invalid_argument("jet: cannot infer dimension n");
  TaylorJet jet(n, r);
  for (const auto& entry : coeffs) {
    const auto e = parse_exponents(entry.at("x"), n, "jet coeff.x");
    jet.set_coefficient(e, parse_rational(entry.at("v"), "jet coeff.v"));
  }
  return jet;
}

std::string encode_endo(const EndoOperator& op, const Signature& sig) {
  json doc;
  doc["n"] = sig.n();
  doc["p"] = sig.p;
  doc["q"] = sig.q;
  json terms = json::array();
  for (const auto& [t, c] : op.terms()) {
    json entry;
    entry["x"] = t.x;
    entry["xi"] = t.xi;
    entry["dx"] = t.dx;
    entry["dxi"] = t.dxi;
    entry["c"] = encode_coefficient(c);
    terms.push_back(std::move(entry));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string encode_resonances(const std::vector<ResonanceEntry>& entries) {
  json doc;
  json values = json::array();
  json list = json::array();
  Rational last;
  bool have_last = false;
  for (const auto& e : entries) {
    if (!have_last || e.delta != last) {
      values.push_back(e.delta.str());
      last = e.delta;
      have_last = true;
    }
    json entry;
    entry["k"] = e.k;
    entry["l"] = e.l;
    entry["s"] = e.s;
    entry["t"] = e.t;
    entry["delta"] = e.delta.str();
    entry["in_sigma0"] = e.in_sigma0;
    list.push_back(std::move(entry));
  }
  doc["values"] = std::move(values);
  doc["entries"] = std::move(list);
  return doc.dump();
}

std::string encode_probe_report(const ProbeReport& report) {
  json cells = json::array();
  for (const auto& cell : report.cells) {
    json c;
    c["k"] = cell.k;
    c["s"] = cell.s;
    c["status"] = to_string(cell.status);
    if (cell.witness) {
      json w;
      w["k"] = cell.witness->k;
      w["s"] = cell.witness->s;
      w["l"] = cell.witness->l;
      w["t"] = cell.witness->t;
      w["delta"] = cell.witness->delta.str();
      w["principal"] = cell.witness->principal.str();
      c["witness"] = std::move(w);
    }
    cells.push_back(std::move(c));
  }
  return cells.dump();
}

std::pair<PolynomialDoc, PolynomialDoc> decode_symbol_pair(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
    throw std::invalid_argument("expected {\"P\": polynomial, \"Q\": polynomial}");
  auto p = decode_polynomial_json(j.at("P"));
  auto q = decode_polynomial_json(j.at("Q"));
  if (!(p.sig == q.sig)) throw std::invalid_argument("P and Q must share the same signature");
  return {std::move(p), std::move(q)};
}

std::string encode_critical_resonance(const CriticalResonance& e) {
  json j;
  j["error"] = "CriticalResonance";
  j["k"] = e.k;
  j["s"] = e.s;
  j["l"] = e.l;
  j["t"] = e.t;
  j["delta"] = e.delta.str();
  return j.dump();
}

}  // namespace ceq
