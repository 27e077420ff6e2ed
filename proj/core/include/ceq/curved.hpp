#pragma once

#include <vector>

#include "ceq/diff_op.hpp"
#include "ceq/jets.hpp"
#include "ceq/quantizer.hpp"

namespace ceq {

// sigma-symbol of the Laplace-Beltrami operator of g = F eta, with jet
// coefficients: g^{ij} d_i d_j + |g|^{-1/2} d_i(|g|^{1/2} g^{ij}) d_j.
SymbolPolynomial laplace_beltrami_symbol(const MetricJet& m);

// Schroedinger-picture operator on functions:
//   P^ = |Vol_g|^{-mu} o quantize(P) o |Vol_g|^{lambda},
// with |Vol_g| = F^{n/2} |dx| and all conjugations as jet-coefficient
// sigma-symbol compositions. Requires lambda + mu = 1; propagates
// CriticalResonance from the quantizer.
OperatorSymbol quantum_hamiltonian(const SymbolPolynomial& p, const MetricJet& m,
                                   const Weights& w);

struct CoefficientDiff {
  Monomial monomial;
  Coefficient actual;
  Coefficient expected;
};

struct GeodesicReport {
  bool pass = false;
  SymbolPolynomial actual;    // origin coefficients of the quantized geodesic flow
  SymbolPolynomial expected;  // origin coefficients of -ħ^2(Lap_g - c R_g)
  Rational scalar_curvature;  // R_g at the origin
  std::vector<CoefficientDiff> diffs;

  GeodesicReport(int n) : actual(n), expected(n) {}
};

// Quantizes H = g^{ij} xi_i xi_j at lambda = mu = 1/2 through the
// Schroedinger-picture construction and compares, coefficient by coefficient
// at the origin, with -ħ^2(Lap_g - n^2/(4(n-1)(n+2)) R_g). Requires n >= 2
// and jet order >= 4.
GeodesicReport geodesic_flow_check(const MetricJet& m);

}  // namespace ceq
