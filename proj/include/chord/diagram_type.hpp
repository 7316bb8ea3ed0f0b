#pragma once

#include <optional>
#include <string>

#include "chord/spectrum.hpp"

namespace chord {

enum class Orientability { Orientable, NonOrientableAllowed };

// Full type record of a (partial) chord diagram on ordered backbones.
// genusOrH is the genus g when orientable, and h (= 2 - Euler
// characteristic - n) when twisted chords are allowed; h equals 2g on
// orientable gluings.
struct DiagramType {
  Orientability orient = Orientability::Orientable;
  int genusOrH = 0;
  int k = 0;   // chords
  long l = 0;  // marked points
  Spectrum bSpec;
  Spectrum nSpec;
  std::optional<Spectrum> pSpec;

  long backbones() const { return bSpec.size(); }
  long boundaryCycles() const { return nSpec.size(); }

  std::string to_string() const;
};

// True iff all linear relations between the entries hold:
//   b = |bSpec|, n = |nSpec| (= |pSpec| when present),
//   l = weight(nSpec), 2k + l = weight(bSpec),
//   2k + b = weight(pSpec) when present,
//   b - k + n = 2 - 2g (orientable) or 2 - h.
bool validate_type(const DiagramType& t);

}  // namespace chord
