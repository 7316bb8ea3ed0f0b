#pragma once

#include <map>
#include <tuple>

#include "chord/rational.hpp"
#include "chord/spectrum.hpp"

namespace chord {

// Memo for the erase-a-chord recursion on one backbone.
using OneBackboneMemo = std::map<std::tuple<int, int, Spectrum>, Int>;

// Number of one-backbone diagrams of genus g with k chords and boundary
// point spectrum n (the backbone size is implied: 2k + weight(n)).
// Computed by classifying the two ways a chord can sit on the boundary
// and erasing it; returns 0 for impossible types.
Int one_backbone_count(int g, int k, const Spectrum& n, OneBackboneMemo& memo);

}  // namespace chord
