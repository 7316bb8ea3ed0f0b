#include "chord/kp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

namespace chord {

Series partial_derivative(const Series& s, int i) {
  Series out;
  for (const auto& [key, coeff] : s.terms()) {
    const int m = key.s.mult(i);
    if (m == 0) continue;
    TermKey nk = key;
    nk.s.bump(i, -1);
    out.add_term(nk, coeff * m);
  }
  return out;
}

Series series_product(const Series& a, const Series& b, const Truncation& trunc) {
  Series out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Spectrum t = ka.t + kb.t;
      if (t.size() > trunc.maxBackbones || t.weight() > trunc.maxBackboneWeight)
        continue;
      out.add_term({ka.xExp + kb.xExp, ka.s + kb.s, std::move(t)}, ca * cb);
    }
  }
  return out;
}

namespace {

Series multi_derivative(const Series& s, std::initializer_list<int> indices) {
  Series r = s;
  for (int i : indices) r = partial_derivative(r, i);
  return r;
}

Series restrict_t_degree(const Series& s, int tOrder) {
  Series out;
  for (const auto& [key, coeff] : s.terms())
    if (key.t.size() <= tOrder) out.add_term(key, coeff);
  return out;
}

}  // namespace

Series kp_residual(const EvolutionState& state, int equation, int yOrder,
                   int tOrder) {
  if (equation < 1 || equation > 4) throw std::invalid_argument("equation in 1..4");
  if (yOrder > state.computed_k())
    throw TruncationExceeded("y order above computed slices");
  if (tOrder > state.spec().trunc.maxBackbones)
    throw TruncationExceeded("t order above backbone bound");
  const Truncation& tr = state.spec().trunc;

  // Folded slices and every derivative combination the four equations use.
  const int K = yOrder;
  std::vector<Series> f(K + 1);
  for (int k = 0; k <= K; ++k) f[k] = state.slice(k).x_folded();

  auto conv2 = [&](const std::vector<Series>& u, const std::vector<Series>& v) {
    Series out;
    for (int a = 0; a <= K; ++a) {
      if (u[a].empty()) continue;
      out += series_product(u[a], v[K - a], tr);
    }
    return out;
  };

  std::vector<Series> d11(K + 1), d21(K + 1), d31(K + 1), d111(K + 1);
  for (int k = 0; k <= K; ++k) {
    d11[k] = multi_derivative(f[k], {1, 1});
    d21[k] = multi_derivative(f[k], {2, 1});
    d31[k] = multi_derivative(f[k], {3, 1});
    d111[k] = multi_derivative(f[k], {1, 1, 1});
  }
  const Series& top = f[K];

  Series res;
  switch (equation) {
    case 1:
      res = multi_derivative(top, {2, 2});
      res.add_scaled(conv2(d11, d11), make_rat(1, 2));
      res.add_scaled(d31[K], Rat(-1));
      res.add_scaled(multi_derivative(d11[K], {1, 1}), make_rat(1, 12));
      break;
    case 2:
      res = multi_derivative(top, {3, 2});
      res += conv2(d11, d21);
      res.add_scaled(multi_derivative(top, {4, 1}), Rat(-1));
      res.add_scaled(multi_derivative(d21[K], {1, 1}), make_rat(1, 6));
      break;
    case 3: {
      res = multi_derivative(top, {4, 2});
      res.add_scaled(conv2(d21, d21), make_rat(1, 2));
      res += conv2(d11, d31);
      res.add_scaled(multi_derivative(top, {5, 1}), Rat(-1));
      res.add_scaled(conv2(d111, d111), make_rat(-1, 8));
      std::vector<Series> d1111(K + 1);
      for (int k = 0; k <= K; ++k) d1111[k] = partial_derivative(d111[k], 1);
      res.add_scaled(conv2(d11, d1111), make_rat(-1, 12));
      res.add_scaled(multi_derivative(d31[K], {1, 1}), make_rat(1, 4));
      res.add_scaled(multi_derivative(d1111[K], {1, 1}), make_rat(-1, 120));
      break;
    }
    case 4: {
      res = multi_derivative(top, {3, 3});
      // triple convolution for F11^3
      Series cubic;
      for (int a = 0; a <= K; ++a)
        for (int b = 0; a + b <= K; ++b) {
          Series ab = series_product(d11[a], d11[b], tr);
          if (ab.empty()) continue;
          cubic += series_product(ab, d11[K - a - b], tr);
        }
      res.add_scaled(cubic, make_rat(-1, 3));
      res += conv2(d21, d21);
      res += conv2(d11, d31);
      res.add_scaled(multi_derivative(top, {5, 1}), Rat(-1));
      res.add_scaled(conv2(d111, d111), make_rat(-1, 4));
      std::vector<Series> d1111(K + 1);
      for (int k = 0; k <= K; ++k) d1111[k] = partial_derivative(d111[k], 1);
      res.add_scaled(conv2(d11, d1111), make_rat(-1, 3));
      res.add_scaled(multi_derivative(d31[K], {1, 1}), make_rat(1, 3));
      res.add_scaled(multi_derivative(d1111[K], {1, 1}), make_rat(-1, 45));
      break;
    }
  }
  return restrict_t_degree(res, tOrder);
}

Series apply_boson(int i, const Series& s) {
  if (i == 0) return Series();
  if (i > 0) {
    Series out;
    for (const auto& [key, coeff] : s.terms()) {
      TermKey nk = key;
      nk.s.bump(i, 1);
      out.add_term(nk, coeff);
    }
    return out;
  }
  return partial_derivative(s, -i).scaled(Rat(-i));
}

Series apply_lambda(int m, const Series& s, int indexBound) {
  Series out;
  for (int i = -indexBound; i <= indexBound; ++i) {
    const int j = m - i;
    if (i == 0 || j == 0 || std::abs(j) > indexBound) continue;
    out.add_scaled(apply_boson(i, apply_boson(j, s)), make_rat(1, 2));
  }
  return out;
}

Series apply_cubic_boson(int m, const Series& s, int indexBound) {
  Series out;
  for (int i = -indexBound; i <= indexBound; ++i) {
    if (i == 0) continue;
    for (int j = -indexBound; j <= indexBound; ++j) {
      if (j == 0) continue;
      const int r = m - i - j;
      if (r == 0 || std::abs(r) > indexBound) continue;
      std::array<int, 3> idx{i, j, r};
      std::sort(idx.begin(), idx.end());  // ascending: annihilators first
      Series term = s;
      for (int v : idx) term = apply_boson(v, term);
      out.add_scaled(term, make_rat(1, 6));
    }
  }
  return out;
}

bool operator_identity_check(OperatorIdentity which, int maxWeight) {
  const bool point = which == OperatorIdentity::PointSplitMerge;
  // All monomials in s_1..s_maxWeight of weight <= maxWeight.
  std::vector<Spectrum> monomials;
  std::function<void(int, long, Spectrum&)> build = [&](int idx, long weight,
                                                        Spectrum& cur) {
    monomials.push_back(cur);
    for (int i = idx; i <= maxWeight; ++i) {
      if (weight + i > maxWeight) break;
      cur.bump(i, 1);
      build(i, weight + i, cur);
      cur.bump(i, -1);
    }
  };
  Spectrum cur;
  build(1, 0, cur);

  const int bound = maxWeight + 4;
  for (const Spectrum& mono : monomials) {
    for (int s0 = 0; s0 <= (point ? 2 : 0); ++s0) {
      Spectrum full = mono;
      if (s0 > 0) full.bump(0, s0);
      const Series m = Series::monomial({0, full, Spectrum()});
      Series lhs, rhs;
      if (point) {
        lhs = apply_linear_operator(LinearOpKind::PointSplit, m);
        lhs += apply_linear_operator(LinearOpKind::PointMerge, m);
        // s_0^2 d/ds_2 + s_0 Lambda_{-2} + M_{-2}, with s_0 a spectator.
        Series d2 = partial_derivative(m, 2);
        for (const auto& [key, coeff] : d2.terms()) {
          TermKey nk = key;
          nk.s.bump(0, 2);
          rhs.add_term(nk, coeff);
        }
        Series lam = apply_lambda(-2, m, bound);
        for (const auto& [key, coeff] : lam.terms()) {
          TermKey nk = key;
          nk.s.bump(0, 1);
          rhs.add_term(nk, coeff);
        }
        rhs += apply_cubic_boson(-2, m, bound);
      } else {
        lhs = apply_linear_operator(LinearOpKind::LengthSplit, m);
        lhs += apply_linear_operator(LinearOpKind::LengthMerge, m);
        rhs = apply_cubic_boson(2, m, bound);
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace chord
