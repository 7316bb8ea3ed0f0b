#include "doctest.h"

#include <random>

#include "chord/diagram_type.hpp"
#include "chord/spectrum.hpp"

using namespace chord;

TEST_CASE("spectrum canonical form and accessors") {
  Spectrum s;
  CHECK(s.empty());
  CHECK(s.size() == 0);
  CHECK(s.weight() == 0);
  s.bump(3, 2);
  s.bump(0, 1);
  CHECK(s.mult(3) == 2);
  CHECK(s.mult(7) == 0);
  CHECK(s.size() == 3);
  CHECK(s.weight() == 6);
  s.bump(3, -2);
  CHECK(s.mult(3) == 0);
  CHECK(s.entries().size() == 1);  // zero entries are erased
  CHECK(s.to_string() == "e0");
}

TEST_CASE("subtraction fails instead of going negative") {
  Spectrum a = Spectrum::unit(2, 1);
  Spectrum b = Spectrum::unit(2, 2);
  CHECK(!a.minus(b).has_value());
  CHECK(b.minus(a).has_value());
  CHECK(*b.minus(a) == Spectrum::unit(2, 1));
  CHECK_THROWS_AS(a.bump(2, -5), std::underflow_error);
}

TEST_CASE("size and weight are additive, addition commutes") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> idx(0, 8), mult(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Spectrum a, b;
    for (int i = 0; i < 4; ++i) {
      a.bump(idx(rng), mult(rng));
      b.bump(idx(rng), mult(rng));
    }
    Spectrum sum = a + b;
    CHECK(sum.size() == a.size() + b.size());
    CHECK(sum.weight() == a.weight() + b.weight());
    CHECK(sum == b + a);
    CHECK(*sum.minus(b) == a);
  }
}

TEST_CASE("validate_type accepts the worked two-backbone example") {
  DiagramType t;
  t.orient = Orientability::Orientable;
  t.genusOrH = 1;
  t.k = 6;
  t.l = 2;
  t.bSpec = Spectrum::unit(6) + Spectrum::unit(8);
  t.nSpec = Spectrum::unit(0, 2) + Spectrum::unit(1, 2);
  t.pSpec = Spectrum::unit(1) + Spectrum::unit(2, 2) + Spectrum::unit(9);
  CHECK(validate_type(t));
}

TEST_CASE("validate_type accepts chordless one-backbone diagrams") {
  for (int m = 1; m <= 6; ++m) {
    DiagramType t;
    t.genusOrH = 0;
    t.k = 0;
    t.l = m;
    t.bSpec = Spectrum::unit(m);
    t.nSpec = Spectrum::unit(m);
    CHECK(validate_type(t));
  }
}

TEST_CASE("validate_type rejects a wrong length-spectrum weight") {
  DiagramType t;
  t.genusOrH = 0;
  t.k = 1;
  t.l = 0;
  t.bSpec = Spectrum::unit(2);
  t.nSpec = Spectrum::unit(0, 2);
  t.pSpec = Spectrum::unit(1, 2);  // weight 2 but 2k + b = 3
  CHECK(!validate_type(t));
  t.pSpec = Spectrum::unit(1) + Spectrum::unit(2);
  CHECK(validate_type(t));
}
