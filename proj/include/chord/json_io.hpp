#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chord/evolution.hpp"
#include "chord/series.hpp"
#include "chord/spectrum.hpp"

namespace chord {

using Json = nlohmann::ordered_json;

// Canonical encodings shared by the CLI and the golden-file tests:
// a Spectrum is a sorted array of [index, multiplicity] pairs, a Series
// a sorted array of {x, s, t, num, den} objects.
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

std::string spectrum_to_compact(const Spectrum& s);  // "4:1+8:2", "0" if empty

// One row of a count table.
struct CountRow {
  std::string variant;  // "orientable" | "non-orientable"
  std::string model;    // "point" | "length" | "vertex"
  int gOrH = 0;
  int k = 0;
  long l = 0;
  Spectrum bSpec;    // point: sizes; length: backbone count as 1:b
  Spectrum nOrP;
  Int count = 0;
};

// All nonzero counts of an evolution state, in canonical key order.
std::vector<CountRow> state_to_rows(const EvolutionState& state);

Json rows_to_json(const std::vector<CountRow>& rows, const Json& header);
std::string rows_to_csv(const std::vector<CountRow>& rows);

}  // namespace chord
