#include "doctest.h"

#include "chord/checks.hpp"
#include "chord/evolution.hpp"
#include "chord/specialize.hpp"

using namespace chord;

TEST_CASE("catalan series") {
  RatSeries c = catalan_series(7);
  const long want[7] = {1, 1, 2, 5, 14, 42, 132};
  for (int i = 0; i < 7; ++i) CHECK(c.at(i) == want[i]);
}

TEST_CASE("marked-weight polynomials match the frozen table") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {4, 1, 8}, 0};
  EvolutionState state = evolve(spec);
  auto polys = planar_marked_weight_polynomials(state, 8);
  auto expect = expected_marked_weight_polynomials();
  for (int m = 0; m <= 8; ++m) CHECK(polys[m] == expect[m]);
}

TEST_CASE("complete one-backbone series is the Catalan series") {
  ModelSpec spec{SpectrumKind::Length, Variant::Orientable, {6, 1, 1}, 0};
  EvolutionState state = evolve(spec);
  RatSeries c = complete_series(state, 0, 1, 7);
  RatSeries cat = catalan_series(7);
  CHECK(c == cat);
}

TEST_CASE("shape counts") {
  ModelSpec spec{SpectrumKind::Length, Variant::Orientable, {6, 2, 2}, 0};
  EvolutionState state = evolve(spec);

  // genus zero, one backbone: only the single-chord diagram is a shape
  RatSeries s01 = shape_series(state, 0, 1, 7);
  CHECK(s01.at(0) == 0);
  CHECK(s01.at(1) == 1);
  for (int i = 2; i < 7; ++i) CHECK(s01.at(i) == 0);

  // genus one, one backbone: shapes live at 3..5 chords, starting with
  // the crossing pair under a rainbow
  RatSeries s11 = shape_series(state, 1, 1, 7);
  CHECK(s11.at(0) == 0);
  CHECK(s11.at(1) == 0);
  CHECK(s11.at(2) == 0);
  CHECK(s11.at(3) == 1);
  CHECK(s11.at(6) == 0);

  // genus zero, two backbones: 1/2! times shape counts at 3 and 4 chords
  RatSeries s02 = shape_series(state, 0, 2, 7);
  CHECK(s02.at(3) == make_rat(1, 2));
  CHECK(s02.at(5) == 0);
  CHECK(s02.at(6) == 0);
}

TEST_CASE("generic specialization carries y shifts") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {2, 1, 4}, 0};
  EvolutionState state = evolve(spec);
  SpecializePlan plan;
  plan.xExp = -2;
  plan.ySliceFactor = 2;
  plan.sAssign = [](int i) -> SAssign {
    if (i == 0) return {Polynomial(Rat(1)), 0};
    return {Polynomial(Rat(1)), i};
  };
  plan.tWeight = [](const Spectrum&) { return Polynomial(Rat(1)); };
  PolySeries series = specialize(state, plan, 5);
  // y^4 collects every planar diagram on four vertices: the chordless
  // backbone, six one-chord placements and two complete matchings.
  CHECK(series.at(4) == Polynomial(Rat(1 + 6 + 2)));
}

TEST_CASE("lambda1 consistency is vacuous at order zero") {
  ModelSpec vertexSpec{SpectrumKind::Vertex, Variant::Orientable, {0, 1, 1}, 0};
  ModelSpec g1Spec{SpectrumKind::Length, Variant::Orientable, {0, 1, 1}, 0};
  CHECK(lambda1_check(init_state(vertexSpec), init_state(g1Spec), 0));
  ModelSpec pointSpec{SpectrumKind::Point, Variant::Orientable, {0, 1, 1}, 0};
  CHECK_THROWS_AS(lambda1_check(init_state(pointSpec), init_state(g1Spec), 0),
                  MismatchedModels);
}
