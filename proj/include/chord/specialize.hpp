#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chord/evolution.hpp"
#include "chord/polynomial.hpp"
#include "chord/power_series.hpp"

namespace chord {

// Substitution of the s/t variables of an evolution state, producing a
// truncated series in y with polynomial coefficients. Each y-slice k
// contributes at y^(k * ySliceFactor + sum of per-variable shifts).
struct SAssign {
  Polynomial value;
  int yShift = 0;
};

struct SpecializePlan {
  std::optional<int> xExp;  // keep only this x exponent ...
  bool foldX = false;       // ... or sum over all of them (x = 1)
  std::function<SAssign(int)> sAssign;
  std::function<Polynomial(const Spectrum&)> tWeight;
  int ySliceFactor = 1;
};

PolySeries specialize(const EvolutionState& state, const SpecializePlan& plan,
                      int order);

// Genus-zero one-backbone substitution s_0 = 1, s_i = q (y s)^i, t_j = 1:
// the coefficient of y^m collects diagrams with m backbone vertices,
// weighted q^(cycles with a marked point) s^(marked points). Index 0
// holds the empty-diagram normalization 1.
std::vector<Polynomial> planar_marked_weight_polynomials(
    const EvolutionState& pointState, int maxM);

// C_{g,b}(y): complete-diagram counts divided by b!, from a length state
// with every s_i set to 1.
RatSeries complete_series(const EvolutionState& lengthState, int g, int b,
                          int order);

// Same with s_1 = s_2 = 0: complete diagrams with no boundary cycles of
// length 1 or 2 (shapes with their rainbows removed).
RatSeries rainbow_free_series(const EvolutionState& lengthState, int g, int b,
                              int order);

// Shape counts S_{g,b}(y): rainbow_free_series shifted by the b rainbows
// that inflate a rainbow-free diagram back to a shape. The one-chord
// genus-zero diagram is its own rainbow and is the one special case.
RatSeries shape_series(const EvolutionState& lengthState, int g, int b, int order);

// Length-spectrum slice sums at numeric weights s_i = weights[i-1]
// (zero beyond the list), restricted to x^(2g-2) t^b; entry k of the
// result is the weighted diagram count at k chords, divided by b!.
std::vector<Rat> length_weight_sums(const EvolutionState& lengthState, int g, int b,
                                    const std::vector<Rat>& weights);

// Catalan generating function (1 - sqrt(1-4z)) / (2z).
RatSeries catalan_series(int order);

}  // namespace chord
