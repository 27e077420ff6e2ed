#include "ceq/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "ceq/harmonic.hpp"
#include "ceq/invariants.hpp"
#include "ceq/lie.hpp"
#include "ceq/quantizer.hpp"
#include "ceq/sampling.hpp"
#include "ceq/star_product.hpp"

namespace ceq {
namespace {

class Checker {
 public:
  explicit Checker(VerifyResult& result) : result_(result) {}

  template <typename T>
  void equal(const T& actual, const T& expected, const std::string& label) {
    ++result_.checked;
    if (actual == expected) return;
    ++result_.failures;
    std::ostringstream os;
    os << label << ": got " << actual << ", expected " << expected;
    result_.messages.push_back(os.str());
  }

  void require(bool ok, const std::string& label) {
    ++result_.checked;
    if (ok) return;
    ++result_.failures;
    result_.messages.push_back(label);
  }

 private:
  VerifyResult& result_;
};

void suite_ring(const VerifyOptions& opt, Checker& check) {
  Sampler sampler(opt.seed);
  const int n = opt.sig.n();
  for (int c = 0; c < opt.cases; ++c) {
    const auto p = sampler.random_symbol(n, opt.degree, opt.degree, 5, true);
    const auto q = sampler.random_symbol(n, opt.degree, opt.degree, 5, true);
    const auto r = sampler.random_symbol(n, opt.degree, opt.degree, 5, true);
    check.equal((p + q) + r, p + (q + r), "additive associativity");
    check.equal(p * (q + r), p * q + p * r, "distributivity");
    check.equal(p * q, q * p, "commutativity");
    check.equal((p * q) * r, p * (q * r), "multiplicative associativity");
    const int i = sampler.uniform_int(0, n - 1);
    const int j = sampler.uniform_int(0, n - 1);
    check.equal(p.differentiate(VarKind::X, i).differentiate(VarKind::Xi, j),
                p.differentiate(VarKind::Xi, j).differentiate(VarKind::X, i),
                "derivatives commute");
    check.equal(raise_index(raise_index(p, opt.sig, VarKind::Xi, i), opt.sig, VarKind::Xi, i), p,
                "raise_index involution");
    SymbolPolynomial sum(n);
    for (const auto& [k, part] : p.xi_degree_split()) sum += part;
    check.equal(sum, p, "xi_degree_split parts sum to the input");
  }
}

void suite_equivariance(const VerifyOptions& opt, Checker& check) {
  Sampler sampler(opt.seed);
  const int n = opt.sig.n();
  const ConformalBasis basis = conformal_generators(opt.sig);
  const Rational delta = opt.weights.delta();
  for (int c = 0; c < opt.cases; ++c) {
    const auto p = sampler.random_symbol(n, opt.degree, 3, 4);
    const OperatorSymbol qp = quantize_tilde(p, opt.weights, opt.sig).output;
    for (int g = 0; g < basis.size(); ++g) {
      const auto lhs = operator_lie(basis.generators[g], qp, opt.weights).body();
      const auto rhs =
          quantize_tilde(symbol_lie(basis.generators[g], p, delta), opt.weights, opt.sig)
              .output.body();
      check.equal(lhs, rhs, "equivariance at generator " + basis.names[g]);
    }
  }
}

void suite_casimir(const VerifyOptions& opt, Checker& check) {
  Sampler sampler(opt.seed);
  const int n = opt.sig.n();
  const Rational delta = opt.weights.delta();
  check.equal(casimir_symbols_basis_sum(opt.sig, delta), casimir_symbols(opt.sig, delta),
              "C_delta closed form vs dual-basis sum");
  check.equal(casimir_operators_basis_sum(opt.sig, opt.weights),
              casimir_operators(opt.sig, opt.weights),
              "C_{lambda,mu} closed form vs dual-basis sum");
  const EndoOperator cdelta = casimir_symbols(opt.sig, delta);
  const EndoOperator r0 = invariant_operator(InvariantName::R0, opt.sig);
  for (int c = 0; c < opt.cases; ++c) {
    const auto p = sampler.random_symbol(n, opt.degree, 2, 4);
    for (const auto& comp : harmonic_decompose(p, opt.sig)) {
      check.equal(endo_apply(cdelta, comp.part),
                  comp.part.scaled(gamma_eigenvalue(comp.k, comp.s, opt.sig, delta)),
                  "C_delta eigenvalue on (k,s) component");
      check.equal(endo_apply(r0, comp.part),
                  comp.part.scaled(rho_eigenvalue(comp.k, comp.s, opt.sig)),
                  "R0 eigenvalue on (k,s) component");
    }
  }
}

void suite_commutant(const VerifyOptions& opt, Checker& check) {
  const Signature& sig = opt.sig;
  const auto op = [&](InvariantName name) { return invariant_operator(name, sig); };
  const EndoOperator r = op(InvariantName::R), e = op(InvariantName::E), t = op(InvariantName::T);
  const EndoOperator g = op(InvariantName::G), d = op(InvariantName::D);
  const EndoOperator lap = op(InvariantName::Delta);
  check.equal(endo_commutator(e, r), r.scaled(Rational(2)), "[E,R] = 2R");
  check.equal(endo_commutator(e, t), t.scaled(Rational(-2)), "[E,T] = -2T");
  check.equal(endo_commutator(t, r), e.scaled(Rational(4)), "[T,R] = 4E");
  check.equal(endo_commutator(d, r), g.scaled(Rational(2)), "[D,R] = 2G");
  check.equal(endo_commutator(r, g), EndoOperator::zero(sig.n()), "[R,G] = 0");
  check.equal(endo_commutator(d, g), lap, "[D,G] = Delta");
  check.equal(endo_commutator(g, t), d.scaled(Rational(-2)), "[G,T] = -2D");
  check.equal(endo_commutator(lap, r), EndoOperator::zero(sig.n()), "[Delta,R] = 0");

  if (sig.n() == 2) {
    Sampler sampler(opt.seed);
    const EndoOperator z = op(InvariantName::Z);
    for (int c = 0; c < opt.cases; ++c) {
      const auto p = sampler.random_symbol(2, 6, 3, 5);
      check.equal(endo_apply(z, p), SymbolPolynomial(2), "Z annihilates the representation");
    }
  }
}

void suite_star(const VerifyOptions& opt, Checker& check) {
  Sampler sampler(opt.seed);
  const int n = opt.sig.n();
  const StarTruncation cfg{2, opt.weights.lambda};
  for (int c = 0; c < opt.cases; ++c) {
    const auto p = sampler.random_symbol(n, 3, 2, 4);
    const auto q = sampler.random_symbol(n, 3, 2, 4);
    const auto product = star(p, q, cfg, opt.sig);
    SymbolPolynomial order0(n);
    for (const auto& [m, coeff] : product.terms())
      order0.add_term(m, Coefficient(coeff.at_hpow(0)));
    check.equal(order0, p * q, "star product order 0 is the commutative product");
    if (opt.weights.lambda == Rational(1, 2))
      check.equal(star_deviation(p, q, opt.weights.lambda, opt.sig), SymbolPolynomial(n),
                  "half-density star deviation vanishes");
    const auto s = sampler.random_symbol(n, 2, 2, 3);
    const StarTruncation tight{2, opt.weights.lambda};
    check.equal(star(star(p, q, tight, opt.sig), s, tight, opt.sig),
                star(p, star(q, s, tight, opt.sig), tight, opt.sig),
                "associativity mod hbar^3");
  }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"ring", "equivariance", "casimir", "commutant", "star"};
}

VerifyResult run_verify_suite(std::string_view name, const VerifyOptions& options) {
  VerifyResult result;
  result.suite = std::string(name);
  Checker check(result);
  if (name == "ring") suite_ring(options, check);
  else if (name == "equivariance") suite_equivariance(options, check);
  else if (name == "casimir") suite_casimir(options, check);
  else if (name == "commutant") suite_commutant(options, check);
  else if (name == "star") suite_star(options, check);
  else throw std::invalid_argument("run_verify_suite: unknown suite '" + result.suite + "'");
  return result;
}

}  // namespace ceq
