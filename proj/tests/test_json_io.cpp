#include "doctest.h"

#include <random>

#include "chord/json_io.hpp"

using namespace chord;

TEST_CASE("spectrum encoding is a sorted pair array") {
  Spectrum s = Spectrum::unit(8) + Spectrum::unit(4) + Spectrum::unit(4);
  Json j = spectrum_to_json(s);
  CHECK(j.dump() == "[[4,2],[8,1]]");
  CHECK(spectrum_from_json(j) == s);
  CHECK(spectrum_to_compact(s) == "4:2+8:1");
  CHECK(spectrum_to_compact(Spectrum()) == "0");
}

TEST_CASE("series round-trips through the canonical encoding") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> idx(0, 6), mult(1, 3), xe(-2, 4);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 20; ++trial) {
    Series s;
    for (int t = 0; t < 6; ++t) {
      TermKey key;
      key.xExp = xe(rng);
      key.s.bump(idx(rng), mult(rng));
      if (trial % 2) key.t.bump(idx(rng) + 1, 1);
      s.add_term(key, make_rat(num(rng), den(rng)));
    }
    Json j = series_to_json(s);
    CHECK(series_from_json(j) == s);
    // canonical order makes the dump reproducible
    CHECK(j.dump() == series_to_json(s).dump());
  }
}

TEST_CASE("count tables serialize deterministically") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {2, 2, 4}, 0};
  EvolutionState state = evolve(spec);
  auto rows = state_to_rows(state);
  REQUIRE(!rows.empty());
  Json header;
  header["model"] = "point";
  const std::string a = rows_to_json(rows, header).dump(2);
  const std::string b = rows_to_json(state_to_rows(state), header).dump(2);
  CHECK(a == b);

  const std::string csv = rows_to_csv(rows);
  CHECK(csv.rfind("variant,model,g_or_h,k,l,b_spec,n_or_p_spec,count\n", 0) == 0);
  // spot check one known row: the one-chord two-vertex diagram
  CHECK(csv.find("orientable,point,0,1,0,2:1,0:2,1\n") != std::string::npos);
}

TEST_CASE("vertex-model rows report the chord count") {
  ModelSpec spec{SpectrumKind::Vertex, Variant::Orientable, {1, 1, 1}, 0};
  EvolutionState state = evolve(spec);
  auto rows = state_to_rows(state);
  for (const auto& r : rows) {
    CHECK(r.model == "vertex");
    CHECK(r.k >= 1);
  }
}
