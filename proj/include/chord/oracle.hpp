#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chord/diagram_type.hpp"
#include "chord/evolution.hpp"
#include "chord/rational.hpp"

namespace chord {

struct DisconnectedDiagram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Concrete diagram: ordered backbones, chords on global slot ids
// (slots of backbone b follow those of backbone b-1), per-chord twist.
struct ChordDiagram {
  std::vector<int> backboneSizes;
  std::vector<std::pair<int, int>> chords;  // global slot ids, first < second
  std::vector<bool> twists;                 // parallel to chords

  int totalSlots() const {
    int n = 0;
    for (int s : backboneSizes) n += s;
    return n;
  }
  int chordCount() const { return static_cast<int>(chords.size()); }
  int markedCount() const { return totalSlots() - 2 * chordCount(); }
};

struct BoundaryCycle {
  int markedPoints = 0;
  int length = 0;  // chord traversals + backbone undersides traversed
};

struct BoundaryProfile {
  std::vector<BoundaryCycle> cycles;
};

// Walks the fatgraph boundary. Twisted chords are handled on the
// orientation double cover: every backbone interval exists in both
// directions and directed orbit pairs give the boundary cycles.
BoundaryProfile boundary_profile(const ChordDiagram& d);

bool is_connected(const ChordDiagram& d);

// Full type of a connected diagram. In non-orientable mode genusOrH is
// h = 2 - b + k - n; pSpec is attached for complete diagrams only.
DiagramType classify(const ChordDiagram& d, Variant variant);

// Calls fn for every matching of 2k slots into k chords (times every
// twist assignment in the non-orientable variant), optionally filtered
// to diagrams whose backbones are connected through chords.
void enumerate_diagrams(const std::vector<int>& backboneSizes, int k,
                        Variant variant, bool connectedOnly,
                        const std::function<void(const ChordDiagram&)>& fn);

// classify() output with the (fixed) backbone tuple dropped.
struct ClassKey {
  int gOrH = 0;
  Spectrum n;
  Spectrum p;  // empty when the diagram is partial
  bool hasP = false;

  auto operator<=>(const ClassKey&) const = default;
};

using TypeHistogram = std::map<ClassKey, Int>;

// Exact histogram over enumerate_diagrams . classify for one ordered
// backbone size tuple.
TypeHistogram count_types(const std::vector<int>& backboneSizes, int k,
                          Variant variant, bool connectedOnly);

// Sum of count_types over all distinct ordered tuples whose size
// multiset is bSpec; comparable against evolution counts.
TypeHistogram count_types_for_bspec(const Spectrum& bSpec, int k, Variant variant,
                                    bool connectedOnly);

}  // namespace chord
