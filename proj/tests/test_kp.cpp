#include "doctest.h"

#include <random>

#include "chord/kp.hpp"

using namespace chord;

namespace {

Series mono(std::initializer_list<std::pair<int, int>> entries, Rat c = Rat(1)) {
  Spectrum s;
  for (const auto& [i, m] : entries) s.bump(i, m);
  return Series::monomial({0, s, Spectrum()}, c);
}

}  // namespace

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(mono({{1, 2}, {0, 1}}), 1) == mono({{1, 1}, {0, 1}}, Rat(2)));
  CHECK(partial_derivative(mono({{1, 2}}), 3).empty());
  Series twice = partial_derivative(partial_derivative(mono({{2, 2}}), 2), 2);
  CHECK(twice == mono({}, Rat(2)));
}

TEST_CASE("mixed partials commute") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(1, 5), mult(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    Series s;
    for (int t = 0; t < 4; ++t) {
      Spectrum sp;
      sp.bump(idx(rng), mult(rng));
      sp.bump(idx(rng), mult(rng));
      s.add_term({0, sp, Spectrum()}, make_rat(idx(rng), mult(rng)));
    }
    const int i = idx(rng), j = idx(rng);
    CHECK(partial_derivative(partial_derivative(s, i), j) ==
          partial_derivative(partial_derivative(s, j), i));
  }
}

TEST_CASE("residuals vanish on the linear initial condition") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {0, 3, 6}, 0};
  EvolutionState state = init_state(spec);
  for (int eq = 1; eq <= 4; ++eq) CHECK(kp_residual(state, eq, 0, 3).empty());
}

TEST_CASE("bosonic operators on single monomials") {
  // multiplication, annihilation and the vanishing zero mode
  CHECK(apply_boson(2, mono({})) == mono({{2, 1}}));
  CHECK(apply_boson(-2, mono({{2, 1}})) == mono({}, Rat(2)));
  CHECK(apply_boson(0, mono({{2, 1}})).empty());

  // the split+merge rewrite on s_2: both sides are s_0^2... acting in
  // the bosonic picture the cubic part contributes nothing else
  Series lhs = apply_linear_operator(LinearOpKind::PointSplit, mono({{2, 1}}));
  lhs += apply_linear_operator(LinearOpKind::PointMerge, mono({{2, 1}}));
  CHECK(lhs == mono({{0, 2}}));
  CHECK(apply_cubic_boson(-2, mono({{2, 1}}), 8).empty());
  Series lam = apply_lambda(-2, mono({{2, 1}}), 8);
  CHECK(lam.empty());  // only the explicit s_0 terms act on s_2

  // the length identity on s_1^2
  Series klhs = apply_linear_operator(LinearOpKind::LengthSplit, mono({{1, 2}}));
  klhs += apply_linear_operator(LinearOpKind::LengthMerge, mono({{1, 2}}));
  CHECK(klhs == apply_cubic_boson(2, mono({{1, 2}}), 8));

  // everything annihilates the constant in the point identity
  Series onePoint = apply_linear_operator(LinearOpKind::PointSplit, mono({}));
  onePoint += apply_linear_operator(LinearOpKind::PointMerge, mono({}));
  CHECK(onePoint.empty());
  CHECK(apply_cubic_boson(-2, mono({}), 8).empty());
}

TEST_CASE("operator identities hold on low-weight monomials") {
  CHECK(operator_identity_check(OperatorIdentity::PointSplitMerge, 6));
  CHECK(operator_identity_check(OperatorIdentity::LengthSplitMerge, 6));
}

TEST_CASE("residual bounds are enforced") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {1, 2, 4}, 0};
  EvolutionState state = evolve(spec);
  CHECK_THROWS_AS(kp_residual(state, 1, 3, 2), TruncationExceeded);
  CHECK_THROWS_AS(kp_residual(state, 5, 0, 2), std::invalid_argument);
}
