// cequant: batch CLI for the conformally equivariant quantization engine.
// Exit codes: 0 success, 1 failed verification/check, 2 critical resonance,
// 3 parse or validation error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ceq/curved.hpp"
#include "ceq/invariants.hpp"
#include "ceq/json_io.hpp"
#include "ceq/quantizer.hpp"
#include "ceq/resonance.hpp"
#include "ceq/star_product.hpp"
#include "ceq/verify.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 12021;

struct CommonOpts {
  int n = 0, p = -1, q = -1;
  std::string lambda, mu, delta;
  std::string in_path, out_path;
  uint64_t seed = kDefaultSeed;
};

std::string slurp(const std::string& path) {
  if (path.empty()) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text << "\n";
}

ceq::Signature signature_from(const CommonOpts& opt) {
  if (opt.p < 0 || opt.q < 0)
    throw std::invalid_argument("missing --p/--q");
  if (opt.n > 0 && opt.p + opt.q != opt.n)
    throw std::invalid_argument("--n must equal --p + --q");
  return ceq::Signature(opt.p, opt.q);
}

// Flags override the document; a conflict is a validation error.
ceq::Signature reconcile_signature(const CommonOpts& opt, const ceq::Signature& doc_sig) {
  if (opt.p >= 0 || opt.q >= 0 || opt.n > 0) {
    ceq::Signature flag_sig = doc_sig;
    if (opt.p >= 0 && opt.q >= 0) flag_sig = ceq::Signature(opt.p, opt.q);
    if (opt.n > 0 && flag_sig.n() != opt.n)
      throw std::invalid_argument("--n disagrees with the signature");
    if (!(flag_sig == doc_sig))
      throw std::invalid_argument("flags disagree with the document signature");
  }
  return doc_sig;
}

ceq::Weights weights_from(const CommonOpts& opt) {
  if (opt.lambda.empty()) throw std::invalid_argument("missing --lambda");
  const ceq::Rational lambda = ceq::Rational::parse(opt.lambda);
  if (!opt.mu.empty()) return {lambda, ceq::Rational::parse(opt.mu)};
  if (!opt.delta.empty()) return {lambda, lambda + ceq::Rational::parse(opt.delta)};
  throw std::invalid_argument("missing --mu or --delta");
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_weights = true) {
  cmd->add_option("--n", opt.n, "dimension n = p + q");
  cmd->add_option("--p", opt.p, "number of +1 metric entries");
  cmd->add_option("--q", opt.q, "number of -1 metric entries");
  if (with_weights) {
    cmd->add_option("--lambda", opt.lambda, "density weight lambda (rational)");
    cmd->add_option("--mu", opt.mu, "density weight mu (rational)");
    cmd->add_option("--delta", opt.delta, "weight shift delta = mu - lambda (rational)");
  }
  cmd->add_option("--in", opt.in_path, "input file (stdin when omitted)");
  cmd->add_option("--out", opt.out_path, "output file (stdout when omitted)");
}

uint64_t env_seed() {
  const char* env = std::getenv("CEQUANT_SEED");
  if (!env) return kDefaultSeed;
  return std::strtoull(env, nullptr, 10);
}

int run(int argc, char** argv) {
  CLI::App app{"conformally equivariant quantization engine"};
  app.require_subcommand(1);

  CommonOpts opt;
  opt.seed = env_seed();

  auto* quantize_cmd = app.add_subcommand("quantize", "quantize a symbol document");
  add_common(quantize_cmd, opt);
  bool graded = false;
  bool with_trace = false;
  quantize_cmd->add_flag("--graded", graded, "emit the graded symbol instead of the operator");
  quantize_cmd->add_flag("--trace", with_trace, "include the recurrence divisor trace");

  auto* star_cmd = app.add_subcommand("star", "star product of two symbols");
  add_common(star_cmd, opt);
  int order = 2;
  star_cmd->add_option("--order", order, "maximum ħ-power retained (default 2)");

  auto* res_cmd = app.add_subcommand("resonances", "enumerate the resonance set");
  add_common(res_cmd, opt, /*with_weights=*/false);
  int max_k = 2;
  res_cmd->add_option("--max-k", max_k, "maximum principal degree k");

  auto* probe_cmd = app.add_subcommand("probe", "probe criticality per (k,s) cell");
  add_common(probe_cmd, opt);
  int probe_max_k = 2;
  int probe_x_degree = 2;
  probe_cmd->add_option("--max-k", probe_max_k, "maximum principal degree k");
  probe_cmd->add_option("--x-degree", probe_x_degree, "x-degree of the probing spanning set");

  auto* casimir_cmd = app.add_subcommand("casimir", "emit a Casimir or named invariant operator");
  add_common(casimir_cmd, opt);
  std::string op_name;
  casimir_cmd->add_option("--name", op_name,
                          "named operator (R,E,T,G,D,Delta,Euler,R0,G0,Delta0,Z,C_sl2)");

  auto* verify_cmd = app.add_subcommand("verify", "run a randomized invariant suite");
  add_common(verify_cmd, opt);
  std::string suite = "equivariance";
  int degree = 4;
  int cases = 20;
  verify_cmd->add_option("--suite", suite, "suite: ring|equivariance|casimir|commutant|star");
  verify_cmd->add_option("--degree", degree, "maximum xi-degree of sampled symbols");
  verify_cmd->add_option("--cases", cases, "number of random cases");
  verify_cmd->add_option("--seed", opt.seed, "RNG seed (or CEQUANT_SEED)");

  auto* geo_cmd = app.add_subcommand("geodesic", "quantized geodesic flow check on a metric jet");
  add_common(geo_cmd, opt, /*with_weights=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 3;
  }

  try {
    if (quantize_cmd->parsed()) {
      const auto doc = ceq::decode_polynomial(slurp(opt.in_path));
      const ceq::Signature sig = reconcile_signature(opt, doc.sig);
      const ceq::Weights w = weights_from(opt);
      if (graded) {
        const auto out = ceq::quantize_graded(doc.poly, w, sig);
        emit(opt.out_path, ceq::encode_polynomial(out, sig, "symbol"));
        return 0;
      }
      const auto result = ceq::quantize(doc.poly, w, sig);
      std::string text = ceq::encode_polynomial(result.output.body(), sig, "operator");
      if (with_trace) {
        nlohmann::json j = nlohmann::json::parse(text);
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& step : result.trace)
          trace.push_back({{"k", step.k}, {"s", step.s}, {"l", step.l}, {"t", step.t},
                           {"divisor", step.divisor.str()}});
        j["trace"] = std::move(trace);
        text = j.dump();
      }
      emit(opt.out_path, text);
      return 0;
    }
    if (star_cmd->parsed()) {
      const auto [pdoc, qdoc] = ceq::decode_symbol_pair(slurp(opt.in_path));
      const ceq::Signature sig = reconcile_signature(opt, pdoc.sig);
      if (opt.lambda.empty()) throw std::invalid_argument("missing --lambda");
      ceq::StarTruncation cfg;
      cfg.order = order;
      cfg.lambda = ceq::Rational::parse(opt.lambda);
      const auto out = ceq::star(pdoc.poly, qdoc.poly, cfg, sig);
      emit(opt.out_path, ceq::encode_polynomial(out, sig, "symbol"));
      return 0;
    }
    if (res_cmd->parsed()) {
      ceq::Signature sig = (opt.p >= 0 && opt.q >= 0) ? signature_from(opt)
                                                      : ceq::Signature(opt.n, 0);
      if (sig.n() < 2) throw std::invalid_argument("resonances: need n >= 2");
      emit(opt.out_path, ceq::encode_resonances(ceq::enumerate_sigma(sig, max_k)));
      return 0;
    }
    if (probe_cmd->parsed()) {
      const ceq::Signature sig =
          (opt.p >= 0 && opt.q >= 0) ? signature_from(opt) : ceq::Signature(opt.n, 0);
      const ceq::Weights w = weights_from(opt);
      const auto report = ceq::probe_critical(sig, w, probe_max_k, probe_x_degree);
      emit(opt.out_path, ceq::encode_probe_report(report));
      return 0;
    }
    if (casimir_cmd->parsed()) {
      const ceq::Signature sig =
          (opt.p >= 0 && opt.q >= 0) ? signature_from(opt) : ceq::Signature(opt.n, 0);
      ceq::EndoOperator out(sig.n());
      if (!op_name.empty()) {
        const auto name = ceq::invariant_name_from_string(op_name);
        if (!name) throw std::invalid_argument("unknown operator name: " + op_name);
        out = ceq::invariant_operator(*name, sig);
      } else if (!opt.lambda.empty() && (!opt.mu.empty() || !opt.delta.empty())) {
        out = ceq::casimir_operators(sig, weights_from(opt));
      } else if (!opt.delta.empty()) {
        out = ceq::casimir_symbols(sig, ceq::Rational::parse(opt.delta));
      } else {
        throw std::invalid_argument("casimir: need --name, --delta, or --lambda with --mu");
      }
      emit(opt.out_path, ceq::encode_endo(out, sig));
      return 0;
    }
    if (verify_cmd->parsed()) {
      ceq::VerifyOptions vopt;
      vopt.sig = (opt.p >= 0 && opt.q >= 0) ? signature_from(opt) : ceq::Signature(opt.n, 0);
      if (!opt.lambda.empty()) vopt.weights = weights_from(opt);
      vopt.degree = degree;
      vopt.cases = cases;
      vopt.seed = opt.seed;
      const auto result = ceq::run_verify_suite(suite, vopt);
      nlohmann::json j;
      j["suite"] = result.suite;
      j["checked"] = result.checked;
      j["failures"] = result.failures;
      if (!result.messages.empty()) j["messages"] = result.messages;
      emit(opt.out_path, j.dump());
      return result.failures == 0 ? 0 : 1;
    }
    if (geo_cmd->parsed()) {
      const ceq::Signature sig =
          (opt.p >= 0 && opt.q >= 0) ? signature_from(opt) : ceq::Signature(opt.n, 0);
      const ceq::TaylorJet jet = ceq::decode_jet(slurp(opt.in_path));
      if (jet.n() != sig.n()) throw std::invalid_argument("jet dimension disagrees with --p/--q");
      const auto report = ceq::geodesic_flow_check(ceq::MetricJet(jet, sig));
      nlohmann::json j;
      j["pass"] = report.pass;
      j["scalar_curvature"] = report.scalar_curvature.str();
      j["actual"] = report.actual.str();
      j["expected"] = report.expected.str();
      emit(opt.out_path, j.dump());
      return report.pass ? 0 : 1;
    }
  } catch (const ceq::CriticalResonance& e) {
    std::cerr << ceq::encode_critical_resonance(e) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\":\"validation\",\"message\":\"" << e.what() << "\"}\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
