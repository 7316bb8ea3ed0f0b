#include "doctest.h"

#include <cmath>

#include "chord/freeprob.hpp"
#include "chord/matrix_model.hpp"

using namespace chord;

namespace {

Rat eval_spn(const Polynomial& poly, long s, long p, long N) {
  std::map<int, Rat> assign{{Polynomial::var_id("s"), Rat(s)},
                            {Polynomial::var_id("p"), Rat(p)},
                            {Polynomial::var_id("N"), Rat(N)}};
  return poly.eval(assign);
}

}  // namespace

TEST_CASE("exact moments in s, p, N") {
  CHECK(exact_moment(0, Variant::Orientable) == Polynomial::variable("N"));

  // E Tr(X+sP)^2 = N^2 + p s^2 for the Hermitian ensemble
  const Polynomial m2 = exact_moment(2, Variant::Orientable);
  const Polynomial want2 = Polynomial::variable("N") * Polynomial::variable("N") +
                           Polynomial::variable("p") * Polynomial::variable("s") *
                               Polynomial::variable("s");
  CHECK(m2 == want2);

  // pure Gaussian part of the fourth moment: 2N^3 + N
  CHECK(eval_spn(exact_moment(4, Variant::Orientable), 0, 5, 3) == 2 * 27 + 3);

  // real symmetric: E Tr(X+sP)^2 = N^2 + N + p s^2
  CHECK(eval_spn(exact_moment(2, Variant::NonOrientable), 1, 2, 3) == 9 + 3 + 2);
}

TEST_CASE("moments have the parity of m in s") {
  for (int m = 1; m <= 5; ++m) {
    const Polynomial poly = exact_moment(m, Variant::Orientable);
    for (const auto& [mono, coeff] : poly.terms()) {
      int sExp = 0;
      for (const auto& [var, e] : mono)
        if (var == Polynomial::var_id("s")) sExp = e;
      CHECK((sExp - m) % 2 == 0);
    }
  }
}

TEST_CASE("product moments agree with single-trace moments") {
  for (int m = 1; m <= 4; ++m)
    CHECK(exact_product_moment(Spectrum::unit(m), Variant::Orientable) ==
          exact_moment(m, Variant::Orientable));
  // a disconnected pair contributes the product of the parts plus the
  // connected bridge terms; at s = 0 and two one-vertex backbones the
  // whole answer is the single bridge chord: E (TrX)^2 = N ... times N^0.
  const Polynomial pair =
      exact_product_moment(Spectrum::unit(1, 2), Variant::Orientable);
  CHECK(eval_spn(pair, 0, 0, 5) == 5);  // E (Tr X)^2 = N
}

TEST_CASE("resolvent series assembles the moment polynomials") {
  ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {2, 1, 4}, 0};
  EvolutionState state = evolve(spec);
  PolySeries res = resolvent_series(state, 5);
  for (int m = 0; m <= 4; ++m) CHECK(res.at(m) == exact_moment(m, Variant::Orientable));
}

TEST_CASE("Monte Carlo traces agree with the exact moments") {
  EnsembleConfig cfg;
  cfg.samples = 40000;
  cfg.seed = 11;

  cfg.ensemble = Ensemble::HermitianUnitary;
  cfg.N = 3;
  MCEstimate herm = sample_trace_powers(cfg, 2);
  CHECK(std::abs(herm.mean - 9.0) <= 4 * herm.stderr_);

  cfg.ensemble = Ensemble::RealSymmetricOrthogonal;
  MCEstimate real = sample_trace_powers(cfg, 2);
  CHECK(std::abs(real.mean - 12.0) <= 4 * real.stderr_);

  cfg.ensemble = Ensemble::HermitianUnitary;
  cfg.N = 4;
  cfg.p = 2;
  cfg.s = 1.0;
  MCEstimate m4 = sample_trace_powers(cfg, 4);
  const double exact = exact_moment_value(4, Variant::Orientable, 1.0, 2, 4);
  CHECK(std::abs(m4.mean - exact) <= 4 * m4.stderr_);

  // product of traces against the exponential formula
  Spectrum bSpec = Spectrum::unit(1) + Spectrum::unit(2);
  MCEstimate prod = sample_trace_powers(cfg, bSpec);
  const Polynomial exactProd = exact_product_moment(bSpec, Variant::Orientable);
  const double exactProdValue = eval_spn(exactProd, 1, 2, 4).get_d();
  CHECK(std::abs(prod.mean - exactProdValue) <= 4 * prod.stderr_);
}

TEST_CASE("squared-factor sampler approaches the free limit") {
  const int N = 80;
  // identity factor: Marchenko-Pastur moments 1 and 2
  std::vector<double> ones(N, 1.0);
  MCEstimate k1 = sample_wishart_like(1, ones, N, 300, 5);
  CHECK(std::abs(k1.mean - 1.0) <= 5 * k1.stderr_ + 1e-12);
  MCEstimate k2 = sample_wishart_like(2, ones, N, 300, 6);
  CHECK(std::abs(k2.mean - 2.0) <= 5 * k2.stderr_ + 1e-12);

  // generic factor at k = 2: the planar weighted count has no 1/N^2
  // correction, so only the statistical error remains.
  std::vector<double> sv(N);
  std::vector<Rat> weights;
  for (int i = 0; i < N; ++i) sv[i] = std::sqrt(0.5 + 1.0 * i / N);
  for (int pw = 1; pw <= 6; ++pw) {
    Rat sum(0);
    for (int i = 0; i < N; ++i) {
      Rat base = make_rat(static_cast<long>(N) + 2 * i, 2 * static_cast<long>(N));
      Rat v(1);
      for (int r = 0; r < pw; ++r) v *= base;
      sum += v;
    }
    weights.push_back(sum / Rat(N));
  }
  RatSeries limit = genus0_length_gf(weights, 4);
  MCEstimate gen = sample_wishart_like(2, sv, N, 400, 9);
  CHECK(std::abs(gen.mean - limit.at(2).get_d()) <= 5 * gen.stderr_ + 1e-9);
}

TEST_CASE("grid determinism for a fixed seed") {
  auto a = run_moment_grid(2, {3}, 2000, 123);
  auto b = run_moment_grid(2, {3}, 2000, 123);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].mean == b[i].mean);
    CHECK(a[i].stderr_ == b[i].stderr_);
  }
}
