#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ceq/endo.hpp"
#include "ceq/lie.hpp"
#include "ceq/signature.hpp"

namespace ceq {

// The named generators of the e(p,q) / ce(p,q) commutant, the n=2 ideal
// element Z and the sl(2) Casimir:
//   R = xi^i xi_i            E = xi_i d_{xi_i} + n/2    T = d_{xi^i} d_{xi_i}
//   G = xi^i d_i             D = d_{xi_i} d_i           Delta = d^i d_i
//   Euler = E - n/2          R0 = R T    G0 = G T       Delta0 = Delta T
//   CSl2 = E^2 - (RT + TR)/2
//   Z = (CSl2 + 3/2) Delta + ([D,[G,CSl2]]_+ - [G,[D,CSl2]]_+)/4   (n = 2 only)
enum class InvariantName { R, E, T, G, D, Delta, Euler, R0, G0, Delta0, Z, CSl2 };

std::optional<InvariantName> invariant_name_from_string(std::string_view s);
const char* to_string(InvariantName name);
std::vector<std::string> invariant_name_list();

// Throws std::invalid_argument for Z with n != 2.
EndoOperator invariant_operator(InvariantName name, const Signature& sig);

// Casimir operator of the action on delta-weighted symbols:
//   C_delta = R0 + 2(1 + n(delta-1) - Euler) Euler - n^2 delta(delta-1).
EndoOperator casimir_symbols(const Signature& sig, const Rational& delta);

// Casimir operator of the action on operators:
//   C_{lambda,mu} = C_delta + G0 - 2(n lambda + Euler) D.
EndoOperator casimir_operators(const Signature& sig, const Weights& w);

// The nilpotent part N_lambda = C_{lambda,mu} - C_delta = G0 - 2(n lambda + Euler) D.
EndoOperator casimir_nilpotent_part(const Signature& sig, const Weights& w);

// symbol_lie(X, ., delta) as an element of End_diff.
EndoOperator symbol_lie_endo(const VectorField& x, const Rational& delta);

// operator_lie(X, ., w) as an element of End_diff, assembled from the
// sigma-symbol composition series with the density Lie derivative.
EndoOperator operator_lie_endo(const VectorField& x, const Weights& w);

// Dual-basis sums B^{ab} rho(X_a) rho(X_b) over the conformal basis; these
// must coincide with the closed forms above.
EndoOperator casimir_symbols_basis_sum(const Signature& sig, const Rational& delta);
EndoOperator casimir_operators_basis_sum(const Signature& sig, const Weights& w);

}  // namespace ceq
