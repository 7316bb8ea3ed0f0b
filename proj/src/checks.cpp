#include "chord/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chord/evolution.hpp"
#include "chord/freeprob.hpp"
#include "chord/kp.hpp"
#include "chord/matrix_model.hpp"
#include "chord/oracle.hpp"
#include "chord/recursion.hpp"
#include "chord/specialize.hpp"

namespace chord {

namespace {

CheckResult result(int criterion, std::string name, bool pass,
                   std::string detail = "") {
  return {criterion, std::move(name), pass, std::move(detail)};
}

Polynomial qs_poly(std::initializer_list<std::array<long, 3>> terms) {
  const Polynomial q = Polynomial::variable("q");
  const Polynomial s = Polynomial::variable("s");
  Polynomial out;
  for (const auto& [coeff, qExp, sExp] : terms) {
    Polynomial t{Rat(coeff)};
    for (long i = 0; i < qExp; ++i) t *= q;
    for (long i = 0; i < sExp; ++i) t *= s;
    out += t;
  }
  return out;
}

Spectrum spec_of(std::initializer_list<std::pair<int, int>> entries) {
  Spectrum s;
  for (const auto& [i, m] : entries) s.bump(i, m);
  return s;
}

Series nspec_series(
    std::initializer_list<std::pair<std::initializer_list<std::pair<int, int>>, long>>
        terms) {
  Series out;
  for (const auto& [entries, coeff] : terms)
    out.add_term({0, spec_of(entries), Spectrum()}, Rat(coeff));
  return out;
}

}  // namespace

std::vector<Polynomial> expected_marked_weight_polynomials() {
  std::vector<Polynomial> expect(9);
  expect[0] = qs_poly({{1, 0, 0}});
  expect[1] = qs_poly({{1, 1, 1}});
  expect[2] = qs_poly({{1, 1, 2}, {1, 0, 0}});
  expect[3] = qs_poly({{1, 1, 3}, {3, 1, 1}});
  expect[4] = qs_poly({{1, 1, 4}, {4, 1, 2}, {2, 2, 2}, {2, 0, 0}});
  expect[5] = qs_poly({{1, 1, 5}, {5, 1, 3}, {5, 2, 3}, {10, 1, 1}});
  expect[6] =
      qs_poly({{1, 1, 6}, {6, 1, 4}, {9, 2, 4}, {15, 1, 2}, {15, 2, 2}, {5, 0, 0}});
  expect[7] = qs_poly(
      {{1, 1, 7}, {7, 1, 5}, {14, 2, 5}, {21, 1, 3}, {42, 2, 3}, {7, 3, 3}, {35, 1, 1}});
  expect[8] = qs_poly({{1, 1, 8},
                       {8, 1, 6},
                       {20, 2, 6},
                       {28, 1, 4},
                       {84, 2, 4},
                       {28, 3, 4},
                       {56, 1, 2},
                       {84, 2, 2},
                       {14, 0, 0}});
  return expect;
}

namespace {

std::vector<Series> expected_ten_vertex_table() {
  std::vector<Series> table(6);
  table[0] = nspec_series({{{{10, 1}}, 1}});
  table[1] = nspec_series({{{{0, 1}, {8, 1}}, 10},
                           {{{1, 1}, {7, 1}}, 10},
                           {{{2, 1}, {6, 1}}, 10},
                           {{{3, 1}, {5, 1}}, 10},
                           {{{4, 2}}, 5},
                           {{{8, 1}}, 45}});
  table[2] = nspec_series({{{{0, 2}, {6, 1}}, 45},
                           {{{0, 1}, {2, 1}, {4, 1}}, 90},
                           {{{1, 1}, {2, 1}, {3, 1}}, 90},
                           {{{0, 1}, {6, 1}}, 325},
                           {{{1, 1}, {5, 1}}, 300},
                           {{{2, 1}, {4, 1}}, 285},
                           {{{6, 1}}, 1050},
                           {{{1, 2}, {4, 1}}, 45},
                           {{{0, 1}, {3, 2}}, 45},
                           {{{3, 2}}, 140},
                           {{{2, 3}}, 15},
                           {{{0, 1}, {1, 1}, {5, 1}}, 90}});
  table[3] = nspec_series({{{{0, 1}, {1, 1}, {3, 1}}, 1850},
                           {{{0, 2}, {1, 1}, {3, 1}}, 360},
                           {{{0, 2}, {4, 1}}, 1000},
                           {{{0, 1}, {1, 2}, {2, 1}}, 360},
                           {{{0, 1}, {2, 2}}, 900},
                           {{{1, 2}, {2, 1}}, 870},
                           {{{0, 1}, {4, 1}}, 4900},
                           {{{1, 1}, {3, 1}}, 4100},
                           {{{0, 3}, {4, 1}}, 120},
                           {{{1, 4}}, 30},
                           {{{0, 2}, {2, 2}}, 180},
                           {{{2, 2}}, 1920},
                           {{{4, 1}}, 8610}});
  table[4] = nspec_series({{{{0, 3}, {2, 1}}, 1720},
                           {{{0, 2}, {1, 2}}, 2465},
                           {{{0, 2}, {2, 1}}, 8890},
                           {{{0, 1}, {1, 2}}, 7940},
                           {{{0, 1}, {2, 1}}, 21930},
                           {{{0, 3}, {1, 2}}, 420},
                           {{{0, 4}, {2, 1}}, 210},
                           {{{1, 2}}, 9120},
                           {{{2, 1}}, 22905}});
  table[5] = nspec_series({{{{0, 6}}, 42},
                           {{{0, 5}}, 386},
                           {{{0, 4}}, 2290},
                           {{{0, 3}}, 7150},
                           {{{0, 2}}, 12143},
                           {{{0, 1}}, 8229}});
  return table;
}

std::string poly_diff_detail(int m, const Polynomial& got, const Polynomial& want) {
  std::ostringstream os;
  os << "m=" << m << ": got " << got.to_string() << ", want " << want.to_string();
  return os.str();
}

}  // namespace

std::vector<CheckResult> check_golden() {
  std::vector<CheckResult> out;

  {
    ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {4, 1, 8}, 0};
    EvolutionState state = evolve(spec);
    const auto polys = planar_marked_weight_polynomials(state, 8);
    const auto expect = expected_marked_weight_polynomials();
    bool pass = true;
    std::string detail;
    for (int m = 0; m <= 8; ++m)
      if (!(polys[m] == expect[m])) {
        pass = false;
        detail = poly_diff_detail(m, polys[m], expect[m]);
        break;
      }
    out.push_back(result(1, "golden: planar marked-weight polynomials m<=8", pass,
                         detail));
  }

  {
    ModelSpec spec{SpectrumKind::Point, Variant::NonOrientable, {5, 1, 10}, 10};
    EvolutionState state = evolve(spec);
    const auto table = expected_ten_vertex_table();
    bool pass = true;
    std::string detail;
    for (int k = 0; k <= 5 && pass; ++k) {
      Series got;
      for (const auto& [key, coeff] : state.slice(k).terms())
        got.add_term({0, key.s, Spectrum()}, coeff);  // fold x, strip t
      if (!(got == table[k])) {
        pass = false;
        detail = "k=" + std::to_string(k) + ": got " + got.to_string();
      }
    }
    out.push_back(
        result(2, "golden: 10-vertex one-backbone twisted-chord table k<=5", pass,
               detail));
  }

  return out;
}

namespace {

using Marginal = std::map<std::pair<int, Spectrum>, Int>;

Marginal oracle_point_marginal(const TypeHistogram& hist) {
  Marginal m;
  for (const auto& [key, cnt] : hist) m[{key.gOrH, key.n}] += cnt;
  return m;
}

Marginal oracle_length_marginal(const TypeHistogram& hist) {
  Marginal m;
  for (const auto& [key, cnt] : hist) {
    if (!key.hasP) continue;
    m[{key.gOrH, key.p}] += cnt;
  }
  return m;
}

// Evolution-side marginal for one slice, restricted to one t-spectrum.
Marginal evolution_marginal(const EvolutionState& state, int k, const Spectrum& t,
                            bool nonor) {
  Marginal m;
  const Rat bfac(factorial(static_cast<unsigned>(t.size())));
  for (const auto& [key, coeff] : state.slice(k).terms()) {
    if (key.t != t) continue;
    const Rat v = coeff * bfac;
    if (!is_integer(v) || v < 0) throw IntegralityViolation("oracle comparison");
    const int gOrH = nonor ? key.xExp + 2 : (key.xExp + 2) / 2;
    m[{gOrH, key.s}] += v.get_num();
  }
  return m;
}

std::string marginal_diff(const Marginal& a, const Marginal& b) {
  for (const auto& [key, cnt] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second != cnt) {
      std::ostringstream os;
      os << "g_or_h=" << key.first << " spec=" << key.second.to_string() << ": "
         << cnt.get_str() << " vs "
         << (it == b.end() ? std::string("0") : it->second.get_str());
      return os.str();
    }
  }
  for (const auto& [key, cnt] : b)
    if (!a.count(key)) {
      std::ostringstream os;
      os << "missing g_or_h=" << key.first << " spec=" << key.second.to_string()
         << "=" << cnt.get_str();
      return os.str();
    }
  return "";
}

// All backbone spectra with the given part count and total weight <= maxW.
std::vector<Spectrum> backbone_spectra(int parts, int maxW) {
  std::vector<Spectrum> out;
  std::function<void(int, int, int, Spectrum&)> rec = [&](int left, int minSize,
                                                          int budget, Spectrum& cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int size = minSize; size * left <= budget; ++size) {
      cur.bump(size, 1);
      rec(left - 1, size, budget - size, cur);
      cur.bump(size, -1);
    }
  };
  Spectrum cur;
  rec(parts, 1, maxW, cur);
  return out;
}

}  // namespace

std::vector<CheckResult> check_oracle(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  bool pass = true;
  std::string detail;

  auto fail = [&](const std::string& where, const std::string& diff) {
    if (!pass) return;
    pass = false;
    detail = where + ": " + diff;
  };

  for (Variant variant : {Variant::Orientable, Variant::NonOrientable}) {
    const bool nonor = variant == Variant::NonOrientable;
    const std::string vname = nonor ? "non-orientable" : "orientable";

    // One backbone, point spectrum, every chord count.
    const int m1 = opt.oracleOneBackboneVertices;
    ModelSpec pointSpec{SpectrumKind::Point, variant, {m1 / 2, 1, m1}, 0};
    EvolutionState pointState = evolve(pointSpec);
    for (int m = 1; m <= m1 && pass; ++m) {
      for (int k = 0; 2 * k <= m && pass; ++k) {
        Marginal oracle =
            oracle_point_marginal(count_types({m}, k, variant, true));
        Marginal evo = evolution_marginal(pointState, k, Spectrum::unit(m), nonor);
        std::string diff = marginal_diff(oracle, evo);
        if (!diff.empty())
          fail("point " + vname + " [" + std::to_string(m) + "] k=" +
                   std::to_string(k),
               diff);
      }
    }

    // One backbone, length spectrum (complete diagrams have 2k vertices).
    ModelSpec lenSpec{SpectrumKind::Length, variant, {m1 / 2, 1, 1}, 0};
    EvolutionState lenState = evolve(lenSpec);
    for (int k = 0; 2 * k <= m1 && pass; ++k) {
      Marginal oracle = oracle_length_marginal(
          count_types(std::vector<int>{std::max(2 * k, 1)}, k, variant, true));
      if (k == 0)  // the empty backbone is the initial condition, not enumerable
        oracle[{0, Spectrum::unit(1)}] = 1;
      Marginal evo = evolution_marginal(lenState, k, Spectrum::unit(1), nonor);
      std::string diff = marginal_diff(oracle, evo);
      if (!diff.empty()) fail("length " + vname + " b=1 k=" + std::to_string(k), diff);
    }

    // Multibackbone point spectrum over every backbone spectrum.
    const int mw = opt.oracleMultiVertices;
    ModelSpec multiSpec{SpectrumKind::Point, variant,
                        {mw / 2, opt.oracleMaxBackbones, mw}, 0};
    EvolutionState multiState = evolve(multiSpec);
    for (int b = 2; b <= opt.oracleMaxBackbones && pass; ++b) {
      for (const Spectrum& bSpec : backbone_spectra(b, mw)) {
        const long w = bSpec.weight();
        for (int k = 0; 2 * k <= w && pass; ++k) {
          Marginal oracle =
              oracle_point_marginal(count_types_for_bspec(bSpec, k, variant, true));
          Marginal evo = evolution_marginal(multiState, k, bSpec, nonor);
          std::string diff = marginal_diff(oracle, evo);
          if (!diff.empty())
            fail("point " + vname + " b=" + bSpec.to_string() + " k=" +
                     std::to_string(k),
                 diff);
        }
      }
    }

    // Multibackbone length spectrum: sum over ordered size tuples of 2k.
    ModelSpec lenMulti{SpectrumKind::Length, variant,
                       {mw / 2, opt.oracleMaxBackbones, opt.oracleMaxBackbones}, 0};
    EvolutionState lenMultiState = evolve(lenMulti);
    for (int b = 2; b <= opt.oracleMaxBackbones && pass; ++b) {
      for (int k = (b + 1) / 2; 2 * k <= mw && pass; ++k) {
        Marginal oracle;
        for (const Spectrum& bSpec : backbone_spectra(b, 2 * k)) {
          if (bSpec.weight() != 2 * k) continue;
          Marginal one =
              oracle_length_marginal(count_types_for_bspec(bSpec, k, variant, true));
          for (const auto& [key, cnt] : one) oracle[key] += cnt;
        }
        Marginal evo =
            evolution_marginal(lenMultiState, k, Spectrum::unit(1, b), nonor);
        std::string diff = marginal_diff(oracle, evo);
        if (!diff.empty())
          fail("length " + vname + " b=" + std::to_string(b) + " k=" +
                   std::to_string(k),
               diff);
      }
    }
  }
  out.push_back(result(3, "oracle equivalence, all four model/variant pairs", pass,
                       detail));

  // One-backbone recursion against the point model.
  {
    ModelSpec spec{SpectrumKind::Point, Variant::Orientable, {5, 1, 10}, 0};
    EvolutionState state = evolve(spec);
    OneBackboneMemo memo;
    bool rpass = true;
    std::string rdetail;
    for (int m = 1; m <= 10 && rpass; ++m) {
      for (int k = 0; 2 * k <= m && rpass; ++k) {
        const int l = m - 2 * k;
        Marginal evo = evolution_marginal(state, k, Spectrum::unit(m), false);
        for (int g = 0; 2 * g <= k && rpass; ++g) {
          const int cycles = k + 1 - 2 * g;
          if (cycles < 1) continue;
          // every n with `cycles` parts and weight l
          std::function<void(int, int, int, Spectrum&)> rec =
              [&](int left, int minIdx, int budget, Spectrum& cur) {
                if (!rpass) return;
                if (left == 0) {
                  if (budget != 0) return;
                  Int rv = one_backbone_count(g, k, cur, memo);
                  auto it = evo.find({g, cur});
                  Int ev = it == evo.end() ? Int(0) : it->second;
                  if (rv != ev) {
                    rpass = false;
                    rdetail = "g=" + std::to_string(g) + " k=" + std::to_string(k) +
                              " n=" + cur.to_string() + ": recursion " + rv.get_str() +
                              " vs evolution " + ev.get_str();
                  }
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
      }
    }
    out.push_back(result(4, "one-backbone erase-a-chord recursion, 2k+l<=10", rpass,
                         rdetail));
  }

  return out;
}

std::vector<KpCell> kp_residual_matrix(int maxYOrder, int tOrder) {
  std::vector<KpCell> cells;
  ModelSpec pointSpec{SpectrumKind::Point, Variant::Orientable,
                      {maxYOrder, tOrder, 8}, 0};
  ModelSpec lenSpec{SpectrumKind::Length, Variant::Orientable,
                    {maxYOrder, tOrder, tOrder}, 0};
  for (const ModelSpec& spec : {pointSpec, lenSpec}) {
    EvolutionState state = evolve(spec);
    const char* label = spec.kind == SpectrumKind::Point ? "point" : "length";
    for (int eq = 1; eq <= 4; ++eq)
      for (int r = 0; r <= maxYOrder; ++r)
        cells.push_back(
            {label, eq, r, kp_residual(state, eq, r, tOrder).empty()});
  }
  return cells;
}

std::vector<CheckResult> check_kp() {
  std::vector<CheckResult> out;

  {
    bool pass = true;
    std::string detail;
    ModelSpec pointSpec{SpectrumKind::Point, Variant::Orientable, {4, 3, 8}, 0};
    ModelSpec lenSpec{SpectrumKind::Length, Variant::Orientable, {4, 3, 3}, 0};
    for (const ModelSpec& spec : {pointSpec, lenSpec}) {
      EvolutionState state = evolve(spec);
      const char* label = spec.kind == SpectrumKind::Point ? "point" : "length";
      for (int eq = 1; eq <= 4 && pass; ++eq)
        for (int r = 0; r <= 4 && pass; ++r) {
          Series res = kp_residual(state, eq, r, 3);
          if (!res.empty()) {
            pass = false;
            detail = std::string(label) + " eq" + std::to_string(eq) + " y^" +
                     std::to_string(r) + ": " + res.to_string();
          }
        }
    }
    out.push_back(result(7, "KP residuals vanish (4 equations, y<=4, t-deg<=3)",
                         pass, detail));
  }

  {
    const bool pointOk = operator_identity_check(OperatorIdentity::PointSplitMerge, 10);
    const bool lenOk = operator_identity_check(OperatorIdentity::LengthSplitMerge, 10);
    out.push_back(result(8, "gl(infinity) operator identities, weight<=10",
                         pointOk && lenOk,
                         pointOk ? (lenOk ? "" : "length identity failed")
                                 : "point identity failed"));
  }

  {
    ModelSpec vertexSpec{SpectrumKind::Vertex, Variant::Orientable, {5, 1, 1}, 0};
    ModelSpec g1Spec{SpectrumKind::Length, Variant::Orientable, {6, 1, 1}, 0};
    const bool ok = lambda1_check(evolve(vertexSpec), evolve(g1Spec), 6);
    out.push_back(result(
        9, "vertex-spectrum derivative link to one-backbone lengths, k<=6", ok, ""));
  }

  return out;
}

std::vector<CheckResult> check_matrix(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  auto cells = run_moment_grid(6, {3, 6}, opt.samples, opt.seed);
  bool pass = true;
  std::string detail;
  double worst = 0;
  for (const auto& c : cells) {
    worst = std::max(worst, c.z);
    const bool ok = c.stderr_ > 0 ? std::abs(c.mean - c.exact) <= 4 * c.stderr_
                                  : c.mean == c.exact;
    if (!ok && pass) {
      pass = false;
      std::ostringstream os;
      os << (c.ensemble == Ensemble::HermitianUnitary ? "hermitian" : "real")
         << " N=" << c.N << " p=" << c.p << " s=" << c.s << " m=" << c.m
         << ": mean=" << c.mean << " exact=" << c.exact << " z=" << c.z;
      detail = os.str();
    }
  }
  if (pass) {
    std::ostringstream os;
    os << "cells=" << cells.size() << " worst |z|=" << worst << " seed=" << opt.seed
       << " samples=" << opt.samples;
    detail = os.str();
  }
  out.push_back(result(10, "Gaussian trace-moment grid within 4 stderr", pass,
                       detail));
  return out;
}

std::vector<CheckResult> check_freeprob() {
  std::vector<CheckResult> out;
  bool pass = true;
  std::string detail;

  // Free additive convolution of the semicircle with the scaled
  // projector law reproduces the planar marked-weight polynomials.
  {
    const RatSeries semiRat = semicircle_moments(9);
    PolySeries semi(9);
    for (int i = 0; i < 9; ++i) semi.set(i, Polynomial(semiRat.at(i)));
    PolySeries proj = projector_moments(9);
    PolySeries sum = free_add(semi, proj, 9);
    const auto expect = expected_marked_weight_polynomials();
    for (int m = 0; m <= 8 && pass; ++m)
      if (!(sum.at(m) == expect[m])) {
        pass = false;
        detail = "free_add m=" + std::to_string(m) + ": " + sum.at(m).to_string();
      }
  }

  // Catalan specialization of the genus-zero length generating function.
  if (pass) {
    RatSeries cat = genus0_length_gf(std::vector<Rat>(8, Rat(1)), 6);
    const long want[6] = {1, 1, 2, 5, 14, 42};
    for (int i = 0; i < 6 && pass; ++i)
      if (cat.at(i) != want[i]) {
        pass = false;
        detail = "catalan coefficient " + std::to_string(i) + " = " +
                 rat_to_string(cat.at(i));
      }
  }

  // Numeric-weight agreement with the genus-zero one-backbone length
  // model. The matrix limit weighs a cycle by its chord traversals
  // while the length spectrum also counts the backbone underside, so
  // on geometric weights s_i = a r^i the two sides differ by exactly
  // one factor of r.
  if (pass) {
    ModelSpec spec{SpectrumKind::Length, Variant::Orientable, {5, 1, 1}, 0};
    EvolutionState state = evolve(spec);
    const std::pair<Rat, Rat> families[] = {
        {Rat(1), Rat(2)}, {Rat(2), Rat(1)}, {Rat(3), Rat(2)}, {make_rat(1, 2), Rat(3)}};
    for (const auto& [alpha, r] : families) {
      std::vector<Rat> weights;  // weights[i-1] = alpha * r^i
      Rat pw = alpha;
      for (int i = 1; i <= 12; ++i) {
        pw = pw * r;
        weights.push_back(pw);
      }
      RatSeries phi = genus0_length_gf(weights, 6);
      std::vector<Rat> evo = length_weight_sums(state, 0, 1, weights);
      for (int k = 1; k <= 5 && pass; ++k) {
        if (phi.at(k) * r != evo[k]) {
          pass = false;
          detail = "weights a=" + rat_to_string(alpha) + " r=" + rat_to_string(r) +
                   " k=" + std::to_string(k) + ": limit " + rat_to_string(phi.at(k)) +
                   " vs model " + rat_to_string(evo[k]);
        }
      }
    }
  }

  out.push_back(result(11, "free probability: convolution and length limits", pass,
                       detail));
  return out;
}

std::vector<CheckResult> check_shapes() {
  std::vector<CheckResult> out;
  const int ord = 7;  // through z^6
  ModelSpec spec{SpectrumKind::Length, Variant::Orientable, {6, 2, 2}, 0};
  EvolutionState state = evolve(spec);

  bool pass = true;
  std::string detail;
  const std::pair<int, int> cases[] = {{0, 1}, {1, 1}, {0, 2}};
  for (const auto& [g, b] : cases) {
    // Each division by z costs one order, so work b orders above the
    // comparison window.
    const int wo = ord + b;
    RatSeries c0 = catalan_series(wo);
    RatSeries one = RatSeries::constant(Rat(1), wo);
    RatSeries two = RatSeries::constant(Rat(2), wo);
    RatSeries w = (c0 - one) * (two - c0).inverse();  // (C0-1)/(2-C0)
    RatSeries invC0 = c0.inverse();

    RatSeries lhs = complete_series(state, g, b, ord);
    RatSeries shapes;
    if (g == 0 && b == 1) {
      // Unstable case: the substitution identity needs the inflation
      // weight z/(1+z) of the single-chord shape, not its bare count.
      RatSeries zp1 = one + RatSeries::identity(wo);
      shapes = RatSeries::identity(wo) * zp1.inverse();
    } else {
      shapes = shape_series(state, g, b, wo);
    }
    RatSeries rhs = shapes.compose(w);
    for (int i = 0; i < b; ++i) rhs = (rhs * invC0).shifted(-1);
    rhs = rhs.truncated(ord);
    if (!(lhs == rhs)) {
      pass = false;
      std::ostringstream os;
      os << "(g=" << g << ",b=" << b << "): lhs";
      for (int i = 0; i < ord; ++i) os << ' ' << rat_to_string(lhs.at(i));
      os << " rhs";
      for (int i = 0; i < ord; ++i) os << ' ' << rat_to_string(rhs.at(i));
      detail = os.str();
      break;
    }
  }
  out.push_back(result(6, "shape/diagram change of variables through z^6", pass,
                       detail));
  return out;
}

std::vector<CheckResult> check_harer_zagier() {
  std::vector<CheckResult> out;
  const int maxN = 8;
  ModelSpec spec{SpectrumKind::Length, Variant::Orientable, {maxN, 1, 1}, 0};
  EvolutionState state = evolve(spec);

  // counts[g][n] = one-backbone complete diagrams of genus g with n chords
  std::vector<std::vector<Int>> counts(maxN / 2 + 2,
                                       std::vector<Int>(maxN + 1, Int(0)));
  for (int n = 0; n <= maxN; ++n)
    for (const auto& [key, coeff] : state.slice(n).terms()) {
      const int g = (key.xExp + 2) / 2;
      const Rat v = coeff;
      if (!is_integer(v)) throw IntegralityViolation("harer-zagier");
      counts[g][n] += v.get_num();
    }

  bool pass = true;
  std::string detail;
  const long catalan[9] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= maxN && pass; ++n)
    if (counts[0][n] != catalan[n]) {
      pass = false;
      detail = "genus 0 count at n=" + std::to_string(n) + " is " +
               counts[0][n].get_str();
    }
  auto at = [&](int g, int n) -> Int {
    if (g < 0 || n < 0) return 0;
    return counts[g][n];
  };
  for (int n = 1; n <= maxN && pass; ++n)
    for (int g = 0; 2 * g <= n && pass; ++g) {
      Int lhs = Int(n + 1) * at(g, n);
      Int rhs = Int(2 * n - 1) *
                (Int(2) * at(g, n - 1) +
                 binomial(2 * n - 2, 2) * at(g - 1, n - 2));
      if (lhs != rhs) {
        pass = false;
        detail = "n=" + std::to_string(n) + " g=" + std::to_string(g) + ": " +
                 lhs.get_str() + " != " + rhs.get_str();
      }
    }
  out.push_back(result(5, "Harer-Zagier recursion on one backbone, n<=8", pass,
                       detail));
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "golden") return check_golden();
  if (name == "oracle") return check_oracle(opt);
  if (name == "kp") return check_kp();
  if (name == "matrix") return check_matrix(opt);
  if (name == "freeprob") return check_freeprob();
  if (name == "shapes") return check_shapes();
  if (name == "harer-zagier") return check_harer_zagier();
  if (name == "all") return run_all_checks(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckResult> run_all_checks(const SuiteOptions& opt) {
  std::vector<CheckResult> all;
  for (const auto* suite :
       {"golden", "oracle", "harer-zagier", "shapes", "kp", "matrix", "freeprob"}) {
    auto r = run_suite(suite, opt);
    all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.criterion < b.criterion;
            });
  return all;
}

}  // namespace chord
