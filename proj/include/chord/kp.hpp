#pragma once

#include "chord/evolution.hpp"
#include "chord/series.hpp"

namespace chord {

// d/ds_i on the term map.
Series partial_derivative(const Series& s, int i);

// Product of two slices (x exponents add, s and t spectra add),
// dropping terms outside the t bounds.
Series series_product(const Series& a, const Series& b, const Truncation& trunc);

// Left minus right of one of the first four KP equations, restricted to
// y-degree yOrder and t-degree <= tOrder, with x already folded to 1.
// equation 1:  F22 = -1/2 F11^2 + F31 - 1/12 F1111
// equation 2:  F32 = -F11 F21 + F41 - 1/6 F2111
// equation 3:  F42 = -1/2 F21^2 - F11 F31 + F51 + 1/8 F111^2
//                    + 1/12 F11 F1111 - 1/4 F3111 + 1/120 F111111
// equation 4:  F33 = 1/3 F11^3 - F21^2 - F11 F31 + F51 + 1/4 F111^2
//                    + 1/3 F11 F1111 - 1/3 F3111 + 1/45 F111111
Series kp_residual(const EvolutionState& state, int equation, int yOrder,
                   int tOrder);

// Bosonic operators on pure s-series: a_i multiplies by s_i (i > 0), is
// zero at i = 0 and differentiates, times -i, at i < 0.
Series apply_boson(int i, const Series& s);

// Lambda_m = 1/2 sum_i a_i a_{m-i}.
Series apply_lambda(int m, const Series& s, int indexBound);

// M_m = 1/6 sum_{i,j} :a_i a_j a_{m-i-j}:, annihilators applied first.
Series apply_cubic_boson(int m, const Series& s, int indexBound);

enum class OperatorIdentity { PointSplitMerge, LengthSplitMerge };

// Checks the gl(infinity) rewrites of the split+merge operators on every
// s-monomial of weight <= maxWeight (with s_0 powers up to 2 in the
// point case, where s_0 is a spectator of the bosonic algebra).
bool operator_identity_check(OperatorIdentity which, int maxWeight);

}  // namespace chord
