#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ceq/diff_op.hpp"
#include "ceq/endo.hpp"
#include "ceq/harmonic.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// Raised when gamma_{k,s} = gamma_{l,t} on a tree component with a nonzero
// right-hand side: the module isomorphism is obstructed at this delta.
class CriticalResonance : public std::runtime_error {
 public:
  CriticalResonance(int k, int s, int l, int t, Rational delta);

  int k, s, l, t;
  Rational delta;
};

// Raised by the closed second-order map at its five resonant shifts.
class SecondOrderResonance : public std::runtime_error {
 public:
  explicit SecondOrderResonance(Rational delta);

  Rational delta;
};

// One recurrence division (k,s) -> (l,t). A zero divisor entry records a
// resonant-but-consistent step whose component was zero-filled.
struct TraceStep {
  int k, s, l, t;
  Rational divisor;
};

struct QuantizationResult {
  SymbolPolynomial input;
  OperatorSymbol output;
  Weights weights;
  std::vector<TraceStep> trace;
};

// The eigenvector of C_{lambda,mu} with eigenvalue gamma_{k,s} and principal
// symbol comp.part, built degree-by-degree:
//   P_{l,t} = [N_lambda(level l+1)]_{(l,t)} / (gamma_{k,s} - gamma_{l,t}),
// confined to the tree 0 <= s-t <= k-l. Throws CriticalResonance when a zero
// divisor meets a nonzero right-hand side.
OperatorSymbol solve_eigenvector(const HarmonicComponent& comp, const Weights& w,
                                 const Signature& sig, std::vector<TraceStep>* trace = nullptr);

// Q~_{lambda,mu}: sum of solve_eigenvector over the eigendecomposition.
// Linear, identity plus xi-degree-lowering part.
QuantizationResult quantize_tilde(const SymbolPolynomial& p, const Weights& w,
                                  const Signature& sig);

// Inverse of Q~ through the finite Neumann series of Id + N.
SymbolPolynomial quantize_tilde_inverse(const SymbolPolynomial& p, const Weights& w,
                                        const Signature& sig);

// Scales each xi-degree-m term by (ihbar)^m; with invert, divides (requires
// every xi-degree-m term to carry ħ-power >= m).
SymbolPolynomial i_hbar(const SymbolPolynomial& p, bool invert = false);

// Q = Q~ o I_hbar, the conformally equivariant quantization map.
QuantizationResult quantize(const SymbolPolynomial& p, const Weights& w, const Signature& sig);

// I_hbar^{-1} o Q~ o I_hbar: the graded form whose ħ-expansion matches the
// displayed half-density and Weyl series.
SymbolPolynomial quantize_graded(const SymbolPolynomial& p, const Weights& w,
                                 const Signature& sig);

// Closed form of Q~ restricted to degree <= 2 symbols:
//   Id + g1 G0 + g2 D + g3 Euler D + g4 Delta0 + g5 D^2.
// Throws SecondOrderResonance for delta in
// {2/n, (n+2)/2n, 1, (n+1)/n, (n+2)/n}.
EndoOperator second_order_map(const Signature& sig, const Weights& w);

// The five closed-form coefficients of second_order_map, in order g1..g5.
std::vector<Rational> second_order_coefficients(const Signature& sig, const Weights& w);

// Graded Weyl expansion sum_m (1/m!)(ihbar/2)^m D^m(P); finite because D is
// nilpotent on polynomials.
SymbolPolynomial weyl_map(const SymbolPolynomial& p);

}  // namespace ceq
