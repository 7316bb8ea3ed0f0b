#include "doctest.h"

#include "chord/checks.hpp"
#include "chord/recursion.hpp"

using namespace chord;

TEST_CASE("base cases and tiny counts") {
  OneBackboneMemo memo;
  CHECK(one_backbone_count(0, 0, Spectrum::unit(3), memo) == 1);
  CHECK(one_backbone_count(0, 0, Spectrum::unit(1, 2) + Spectrum::unit(1), memo) == 0);
  CHECK(one_backbone_count(0, 1, Spectrum::unit(0, 2), memo) == 1);
  CHECK(one_backbone_count(1, 2, Spectrum::unit(0), memo) == 1);
  CHECK(one_backbone_count(0, 2, Spectrum::unit(0, 3), memo) == 2);
  // impossible cycle counts are rejected outright
  CHECK(one_backbone_count(1, 1, Spectrum::unit(0), memo) == 0);
}

TEST_CASE("recursion rebuilds the six-vertex substitution polynomial") {
  // sum over planar six-vertex types of q^(marked cycles) s^(marked points)
  // must give q s^6 + (6q + 9q^2) s^4 + (15q + 15q^2) s^2 + 5.
  OneBackboneMemo memo;
  std::map<std::pair<int, int>, Int> bySQ;  // (sExp, qExp) -> count
  const int m = 6;
  for (int k = 0; 2 * k <= m; ++k) {
    const int l = m - 2 * k;
    const int cycles = k + 1;  // genus zero
    std::function<void(int, int, int, Spectrum&)> rec = [&](int left, int minIdx,
                                                            int budget,
                                                            Spectrum& cur) {
      if (left == 0) {
        if (budget != 0) return;
        Int c = one_backbone_count(0, k, cur, memo);
        if (c != 0) bySQ[{l, static_cast<int>(cur.size()) - cur.mult(0)}] += c;
        return;
      }
      for (int idx = minIdx; idx * left <= budget; ++idx) {
        cur.bump(idx, 1);
        rec(left - 1, idx, budget - idx, cur);
        cur.bump(idx, -1);
      }
    };
    Spectrum cur;
    rec(cycles, 0, l, cur);
  }
  std::map<std::pair<int, int>, Int> expect{{{6, 1}, 1}, {{4, 1}, 6}, {{4, 2}, 9},
                                            {{2, 1}, 15}, {{2, 2}, 15}, {{0, 0}, 5}};
  CHECK(bySQ == expect);
}
