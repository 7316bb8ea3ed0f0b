#include "doctest.h"

#include <random>

#include "chord/freeprob.hpp"

using namespace chord;

namespace {

RatSeries moments_from(std::initializer_list<long> values, int order) {
  RatSeries s(order);
  int i = 0;
  for (long v : values) {
    if (i >= order) break;
    s.set(i++, Rat(v));
  }
  return s;
}

}  // namespace

TEST_CASE("the semicircle R-transform is the identity series") {
  RatSeries r = r_transform(semicircle_moments(10), 8);
  for (int i = 0; i < r.order(); ++i) CHECK(r.at(i) == (i == 1 ? 1 : 0));
}

TEST_CASE("a point mass at zero has vanishing R-transform") {
  RatSeries r = r_transform(moments_from({1}, 8), 6);
  CHECK(r.is_zero());
}

TEST_CASE("projector law R-transform matches its closed form") {
  // (zs - 1 + sqrt((zs-1)^2 + 4zsq)) / (2z) expanded around z = 0.
  const int ord = 8;
  const Polynomial s = Polynomial::variable("s");
  const Polynomial q = Polynomial::variable("q");
  PolySeries disc(ord + 1);
  disc.set(0, Polynomial(Rat(1)));
  disc.set(1, s * (q * Polynomial(Rat(4)) - Polynomial(Rat(2))));
  disc.set(2, s * s);
  PolySeries root = disc.sqrt_one();
  PolySeries num = root - PowerSeries1<Polynomial>::constant(Polynomial(Rat(1)),
                                                             ord + 1);
  num.set(1, num.at(1) + s);
  PolySeries closed = num.shifted(-1).truncated(ord).scaled_rat(make_rat(1, 2));

  PolySeries viaMoments = r_transform(projector_moments(ord + 2), ord);
  for (int i = 0; i < ord; ++i) CHECK(viaMoments.at(i) == closed.at(i));
}

TEST_CASE("moment and R-transform round trips") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    RatSeries m(8);
    m.set(0, Rat(1));
    for (int i = 1; i < 8; ++i) m.set(i, make_rat(num(rng), 1 + (trial % 3)));
    RatSeries r = r_transform(m, 8);
    RatSeries back = moments_from_r(r, 8);
    CHECK(back == m);
  }
}

TEST_CASE("S-transform of standard laws") {
  // Marchenko-Pastur(1): S(z) = 1/(1+z).
  RatSeries s = s_transform(marchenko_pastur_moments(10), 8);
  for (int i = 0; i < s.order(); ++i) CHECK(s.at(i) == (i % 2 ? Rat(-1) : Rat(1)));

  // point mass at one (all moments 1): S = 1.
  RatSeries one = s_transform(moments_from({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 10), 8);
  CHECK(one.at(0) == 1);
  for (int i = 1; i < one.order(); ++i) CHECK(one.at(i) == 0);

  CHECK_THROWS_AS(s_transform(moments_from({1, 0, 1}, 6), 4),
                  NonInvertibleFirstMoment);
}

TEST_CASE("moment and S-transform round trips") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int trial = 0; trial < 15; ++trial) {
    RatSeries m(7);
    m.set(0, Rat(1));
    m.set(1, Rat(1 + (trial % 4)));  // invertible first moment
    for (int i = 2; i < 7; ++i) m.set(i, make_rat(num(rng), 1 + (trial % 2)));
    RatSeries s = s_transform(m, 7);
    CHECK(moments_from_s(s, 7) == m);
  }
}

TEST_CASE("free additive convolution") {
  RatSeries semi = semicircle_moments(9);
  RatSeries delta0 = moments_from({1}, 9);
  CHECK(free_add(semi, delta0, 9) == semi.truncated(9));

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    RatSeries a(7), b(7);
    a.set(0, Rat(1));
    b.set(0, Rat(1));
    for (int i = 1; i < 7; ++i) {
      a.set(i, Rat(num(rng)));
      b.set(i, Rat(num(rng)));
    }
    CHECK(free_add(a, b, 7) == free_add(b, a, 7));
  }
}

TEST_CASE("free multiplicative convolution") {
  RatSeries mp = marchenko_pastur_moments(9);
  RatSeries delta1 = moments_from({1, 1, 1, 1, 1, 1, 1, 1, 1}, 9);
  CHECK(free_mul(mp, delta1, 8) == mp.truncated(8));
  CHECK(free_mul(delta1, delta1, 8) == delta1.truncated(8));

  // MP boxtimes MP has Fuss-Catalan moments binom(3k,k)/(2k+1).
  RatSeries sq = free_mul(mp, mp, 6);
  for (int k = 0; k < 6; ++k) {
    Rat fc = Rat(binomial(3 * k, k)) / Rat(2 * k + 1);
    CHECK(sq.at(k) == fc);
  }
}

TEST_CASE("genus-zero length generating function") {
  RatSeries catalan = genus0_length_gf(std::vector<Rat>(10, Rat(1)), 7);
  const long want[7] = {1, 1, 2, 5, 14, 42, 132};
  for (int i = 0; i < 7; ++i) CHECK(catalan.at(i) == want[i]);

  // weights concentrated on length one keep only the single-chord term
  RatSeries single = genus0_length_gf({Rat(1)}, 6);
  CHECK(single.at(0) == 1);
  CHECK(single.at(1) == 1);
  for (int i = 2; i < 6; ++i) CHECK(single.at(i) == 0);

  CHECK_THROWS_AS(genus0_length_gf({Rat(0), Rat(1)}, 4), ZeroLeadingWeight);
}
