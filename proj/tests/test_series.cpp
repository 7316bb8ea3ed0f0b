#include "doctest.h"

#include <random>

#include "chord/series.hpp"

using namespace chord;

namespace {

Series random_series(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> idx(0, 5), mult(1, 3), xe(-2, 2);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  Series s;
  for (int i = 0; i < terms; ++i) {
    TermKey key;
    key.xExp = xe(rng);
    key.s.bump(idx(rng), mult(rng));
    key.t.bump(idx(rng) + 1, 1);
    s.add_term(key, make_rat(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("coefficient_of on the empty series is zero") {
  Series s;
  CHECK(s.coefficient_of({0, Spectrum::unit(1), Spectrum()}) == 0);
}

TEST_CASE("a series plus its negation is empty") {
  std::mt19937 rng(7);
  Series a = random_series(rng, 6);
  Series sum = a + a.scaled(Rat(-1));
  CHECK(sum.empty());
}

TEST_CASE("direct coefficient lookup") {
  Series s;
  s.add_term({-2, Spectrum::unit(2), Spectrum::unit(2)}, Rat(1));
  s.add_term({-2, Spectrum::unit(1), Spectrum::unit(1)}, Rat(1));
  CHECK(s.coefficient_of({-2, Spectrum::unit(2), Spectrum::unit(2)}) == 1);
  CHECK(s.coefficient_of({-2, Spectrum::unit(3), Spectrum::unit(3)}) == 0);
}

TEST_CASE("linear combinations act coefficientwise") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Series a = random_series(rng, 5);
    Series b = random_series(rng, 5);
    const Rat lambda = make_rat(3, 2), mu = make_rat(-5, 7);
    Series combo = a.scaled(lambda);
    combo.add_scaled(b, mu);
    for (const auto& [key, coeff] : combo.terms()) {
      CHECK(coeff == lambda * a.coefficient_of(key) + mu * b.coefficient_of(key));
    }
    for (const auto& [key, coeff] : a.terms()) {
      CHECK(combo.coefficient_of(key) ==
            lambda * coeff + mu * b.coefficient_of(key));
    }
  }
}

TEST_CASE("x folding sums exponents") {
  Series s;
  s.add_term({-2, Spectrum::unit(1), Spectrum()}, Rat(1));
  s.add_term({0, Spectrum::unit(1), Spectrum()}, Rat(2));
  Series folded = s.x_folded();
  CHECK(folded.size() == 1);
  CHECK(folded.coefficient_of({0, Spectrum::unit(1), Spectrum()}) == 3);
}
