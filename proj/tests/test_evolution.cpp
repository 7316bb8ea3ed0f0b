#include "doctest.h"

#include "chord/evolution.hpp"

using namespace chord;

namespace {

Series pure_s(std::initializer_list<std::pair<int, int>> entries, Rat coeff = Rat(1)) {
  Spectrum s;
  for (const auto& [i, m] : entries) s.bump(i, m);
  return Series::monomial({0, s, Spectrum()}, coeff);
}

DiagramType point_type(int g, int k, const Spectrum& b, const Spectrum& n) {
  DiagramType t;
  t.orient = Orientability::Orientable;
  t.genusOrH = g;
  t.k = k;
  t.l = n.weight();
  t.bSpec = b;
  t.nSpec = n;
  return t;
}

}  // namespace

TEST_CASE("initial conditions per model") {
  ModelSpec point{SpectrumKind::Point, Variant::Orientable, {0, 1, 8}, 0};
  EvolutionState ps = init_state(point);
  CHECK(ps.slice(0).coefficient_of({-2, Spectrum::unit(5), Spectrum::unit(5)}) == 1);
  CHECK(ps.slice(0).size() == 8);

  ModelSpec length{SpectrumKind::Length, Variant::Orientable, {0, 1, 1}, 0};
  EvolutionState ls = init_state(length);
  CHECK(ls.slice(0).size() == 1);
  CHECK(ls.slice(0).coefficient_of({-2, Spectrum::unit(1), Spectrum::unit(1)}) == 1);

  ModelSpec vertex{SpectrumKind::Vertex, Variant::Orientable, {0, 1, 1}, 0};
  EvolutionState vs = init_state(vertex);
  CHECK(vs.slice(0).coefficient_of({-2, Spectrum::unit(1, 2), Spectrum()}) == 1);

  ModelSpec bad{SpectrumKind::Vertex, Variant::NonOrientable, {0, 1, 1}, 0};
  CHECK_THROWS_AS(init_state(bad), MismatchedModels);
}

TEST_CASE("linear operators on small monomials") {
  CHECK(apply_linear_operator(LinearOpKind::PointSplit, pure_s({{2, 1}})) ==
        pure_s({{0, 2}}));
  CHECK(apply_linear_operator(LinearOpKind::PointCrossCap, pure_s({{2, 1}})) ==
        pure_s({{0, 1}}));
  CHECK(apply_linear_operator(LinearOpKind::PointMerge, pure_s({{1, 2}})) ==
        pure_s({{0, 1}}));
  CHECK(apply_linear_operator(LinearOpKind::LengthSplit, pure_s({{1, 1}})) ==
        pure_s({{1, 1}, {2, 1}}));
  CHECK(apply_linear_operator(LinearOpKind::LengthMerge, pure_s({{1, 2}})) ==
        pure_s({{4, 1}}));
  // derivative of anything constant in the s variables is zero
  CHECK(apply_linear_operator(LinearOpKind::PointMerge, pure_s({})).empty());
}

TEST_CASE("bilinear bridge operators") {
  Truncation tr{4, 4, 16};
  Series a = Series::monomial({0, Spectrum::unit(1), Spectrum::unit(1)});
  Series q = apply_bilinear(BilinearOpKind::PointBridge, a, a, tr);
  CHECK(q ==
        Series::monomial({0, Spectrum::unit(0), Spectrum::unit(1, 2)}, make_rat(1, 2)));

  Series r = apply_bilinear(BilinearOpKind::LengthBridge, a, a, tr);
  CHECK(r ==
        Series::monomial({0, Spectrum::unit(4), Spectrum::unit(1, 2)}, make_rat(1, 2)));

  Series constant = Series::monomial({0, Spectrum(), Spectrum::unit(1)});
  CHECK(apply_bilinear(BilinearOpKind::PointBridge, a, constant, tr).empty());
}

TEST_CASE("first evolution slices") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {2, 1, 4}, 0};
  EvolutionState state = evolve(spec);
  // one chord on a two-vertex backbone
  CHECK(state.slice(1).coefficient_of(
            {-2, Spectrum::unit(0, 2), Spectrum::unit(2)}) == 1);
  // the crossing matching of the square has genus one
  CHECK(state.slice(2).coefficient_of({0, Spectrum::unit(0), Spectrum::unit(4)}) ==
        1);

  ModelSpec len{SpectrumKind::Length, Variant::Orientable, {1, 1, 1}, 0};
  EvolutionState lstate = evolve(len);
  CHECK(lstate.slice(1) ==
        Series::monomial({-2, Spectrum::unit(1) + Spectrum::unit(2),
                          Spectrum::unit(1)}));
}

TEST_CASE("extract_count on worked examples") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {2, 1, 4}, 0};
  EvolutionState state = evolve(spec);
  CHECK(extract_count(state, point_type(0, 2, Spectrum::unit(4),
                                        Spectrum::unit(0, 3))) == 2);
  CHECK(extract_count(state, point_type(1, 2, Spectrum::unit(4),
                                        Spectrum::unit(0))) == 1);
  CHECK(extract_count(state, point_type(0, 1, Spectrum::unit(2),
                                        Spectrum::unit(0, 2))) == 1);
  state.check_integrality();
}

TEST_CASE("extract_count guards") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {1, 1, 4}, 0};
  EvolutionState state = evolve(spec);
  DiagramType bad = point_type(0, 1, Spectrum::unit(2), Spectrum::unit(1));
  CHECK_THROWS_AS(extract_count(state, bad), std::invalid_argument);

  DiagramType deep = point_type(0, 3, Spectrum::unit(6), Spectrum::unit(0, 4));
  CHECK_THROWS_AS(extract_count(state, deep), TruncationExceeded);

  DiagramType nonor = point_type(0, 1, Spectrum::unit(2), Spectrum::unit(0, 2));
  nonor.orient = Orientability::NonOrientableAllowed;
  nonor.genusOrH = 0;
  CHECK_THROWS_AS(extract_count(state, nonor), MismatchedModels);

  DiagramType withP = point_type(0, 1, Spectrum::unit(2), Spectrum::unit(0, 2));
  withP.pSpec = Spectrum::unit(1) + Spectrum::unit(2);
  CHECK_THROWS_AS(extract_count(state, withP), MismatchedModels);
}

TEST_CASE("point slices respect the degree bookkeeping") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {3, 2, 6}, 0};
  EvolutionState state = evolve(spec);
  state.check_integrality();
  for (int k = 0; k <= 3; ++k) {
    for (const auto& [key, coeff] : state.slice(k).terms()) {
      CHECK(key.s.weight() == key.t.weight() - 2 * k);
      // n = k - 2g - b + 2 with 2g - 2 = xExp
      CHECK(key.s.size() == k - (key.xExp + 2) - key.t.size() + 2);
    }
  }
}

TEST_CASE("length slices tie the total boundary length to 2k + b") {
  for (Variant v : {Variant::Orientable, Variant::NonOrientable}) {
    ModelSpec spec{SpectrumKind::Length, v, {4, 3, 3}, 0};
    EvolutionState state = evolve(spec);
    for (int k = 0; k <= 4; ++k)
      for (const auto& [key, coeff] : state.slice(k).terms())
        CHECK(key.s.weight() == 2 * k + key.t.size());
  }
}

TEST_CASE("orientable counts never exceed the twisted totals") {
  ModelSpec ori{SpectrumKind::Point, Variant::Orientable, {3, 1, 6}, 0};
  ModelSpec non{SpectrumKind::Point, Variant::NonOrientable, {3, 1, 6}, 0};
  EvolutionState so = evolve(ori);
  EvolutionState sn = evolve(non);
  for (int k = 0; k <= 3; ++k)
    for (const auto& [key, coeff] : so.slice(k).terms()) {
      TermKey doubled = key;  // h = 2g sits at the same x exponent
      CHECK(sn.slice(k).coefficient_of(doubled) >= coeff);
    }
}

TEST_CASE("single-size initial condition matches the general one") {
  ModelSpec all{SpectrumKind::Point, Variant::Orientable, {2, 1, 6}, 0};
  ModelSpec single{SpectrumKind::Point, Variant::Orientable, {2, 1, 6}, 6};
  EvolutionState sa = evolve(all);
  EvolutionState ss = evolve(single);
  for (int k = 0; k <= 2; ++k)
    for (const auto& [key, coeff] : ss.slice(k).terms())
      CHECK(sa.slice(k).coefficient_of(key) == coeff);
}
