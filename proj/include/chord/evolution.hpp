#pragma once

#include <stdexcept>
#include <vector>

#include "chord/diagram_type.hpp"
#include "chord/series.hpp"

namespace chord {

enum class SpectrumKind { Point, Length, Vertex };
enum class Variant { Orientable, NonOrientable };

struct Truncation {
  int maxK = 0;
  int maxBackbones = 1;        // bound on size(tSpec)
  long maxBackboneWeight = 1;  // bound on weight(tSpec)
};

struct ModelSpec {
  SpectrumKind kind = SpectrumKind::Point;
  Variant variant = Variant::Orientable;
  Truncation trunc;
  // Point model only: restrict the initial condition to one backbone
  // size (s_m t_m) instead of the full sum over sizes.
  int singleBackboneSize = 0;
};

struct IntegralityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchedModels : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear pieces of the evolution equations, named by what adding a
// chord does to the boundary. Split keeps the Euler characteristic,
// CrossCap costs one x, Merge costs x^2; those x factors live in
// step(), not here, so each operator is the bare s-variable action.
enum class LinearOpKind {
  PointSplit,      // 1/2 sum (i+2) s_j s_{i-j} d/ds_{i+2}
  PointCrossCap,   // 1/2 sum (i+2)(i+1) s_i d/ds_{i+2}
  PointMerge,      // 1/2 sum s_{i-2} sum j(i-j) d2/ds_j ds_{i-j}
  LengthSplit,     // 1/2 sum (i-2) s_j s_{i-j} d/ds_{i-2}
  LengthCrossCap,  // 1/2 sum (i-2)(i-1) s_i d/ds_{i-2}
  LengthMerge,     // 1/2 sum j(i-j) s_{i+2} d2/ds_j ds_{i-j}
};

// Bilinear pieces: a chord bridging two connected components.
enum class BilinearOpKind {
  PointBridge,   // 1/2 sum s_{i-2} sum j(i-j) (da/ds_j)(db/ds_{i-j})
  LengthBridge,  // same with s_{i+2}
};

Series apply_linear_operator(LinearOpKind op, const Series& s);
Series apply_bilinear(BilinearOpKind op, const Series& a, const Series& b,
                      const Truncation& trunc);

// Lambda_1 = sum_{i>=1} i s_{i+1} d/ds_i.
Series lambda1(const Series& s);

// Exact y-expansion of one generating function: slices[k] is the
// coefficient of y^k of the connected generating function.
class EvolutionState {
 public:
  explicit EvolutionState(ModelSpec spec);

  const ModelSpec& spec() const { return spec_; }
  int computed_k() const { return static_cast<int>(slices_.size()) - 1; }
  const Series& slice(int k) const { return slices_.at(k); }
  const std::vector<Series>& slices() const { return slices_; }

  // Appends the next y-slice; no-op beyond trunc.maxK.
  EvolutionState stepped() const;

  // Runs stepped() until maxK slices exist.
  EvolutionState evolved() const;

  // Throws IntegralityViolation unless every term times (t-degree)!
  // is a non-negative integer.
  void check_integrality() const;

 private:
  ModelSpec spec_;
  std::vector<Series> slices_;
};

inline EvolutionState init_state(const ModelSpec& spec) {
  return EvolutionState(spec);
}

inline EvolutionState evolve(const ModelSpec& spec) {
  return EvolutionState(spec).evolved();
}

// b! * coefficient at the key determined by the type; throws
// IntegralityViolation when that is not a non-negative integer and
// TruncationExceeded when the type is outside the computed bounds.
Int extract_count(const EvolutionState& state, const DiagramType& t);

// Vertex-spectrum count for a one-polygon gluing with k chords.
Int extract_vertex_count(const EvolutionState& state, int g, int k,
                         const Spectrum& vSpec);

// Checks 1/2 Lambda_1 Fhat^{(k-1)} = k G1^{(k)} for 1 <= k <= maxK.
bool lambda1_check(const EvolutionState& vertexState,
                   const EvolutionState& lengthState, int maxK);

}  // namespace chord
