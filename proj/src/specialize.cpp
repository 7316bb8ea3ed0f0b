#include "chord/specialize.hpp"

namespace chord {

namespace {

Polynomial poly_pow(const Polynomial& base, int e) {
  Polynomial r(Rat(1));
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

PolySeries specialize(const EvolutionState& state, const SpecializePlan& plan,
                      int order) {
  PolySeries out(order);
  for (int k = 0; k <= state.computed_k(); ++k) {
    for (const auto& [key, coeff] : state.slice(k).terms()) {
      if (!plan.foldX && plan.xExp && key.xExp != *plan.xExp) continue;
      long yIdx = static_cast<long>(k) * plan.ySliceFactor;
      Polynomial value(coeff);
      bool dead = false;
      for (const auto& [i, m] : key.s.entries()) {
        SAssign a = plan.sAssign(i);
        if (a.value.is_zero()) {
          dead = true;
          break;
        }
        value *= poly_pow(a.value, m);
        yIdx += static_cast<long>(a.yShift) * m;
      }
      if (dead || yIdx >= order) continue;
      value *= plan.tWeight(key.t);
      if (value.is_zero()) continue;
      Polynomial acc = out.at(static_cast<int>(yIdx));
      acc += value;
      out.set(static_cast<int>(yIdx), std::move(acc));
    }
  }
  return out;
}

std::vector<Polynomial> planar_marked_weight_polynomials(
    const EvolutionState& pointState, int maxM) {
  if (pointState.spec().kind != SpectrumKind::Point ||
      pointState.spec().variant != Variant::Orientable)
    throw MismatchedModels("needs the orientable point-spectrum model");
  const Polynomial q = Polynomial::variable("q");
  const Polynomial s = Polynomial::variable("s");
  SpecializePlan plan;
  plan.xExp = -2;  // genus zero
  plan.ySliceFactor = 2;
  plan.sAssign = [&](int i) -> SAssign {
    if (i == 0) return {Polynomial(Rat(1)), 0};
    Polynomial v = q;
    for (int r = 0; r < i; ++r) v *= s;
    return {v, i};
  };
  plan.tWeight = [](const Spectrum&) { return Polynomial(Rat(1)); };
  PolySeries series = specialize(pointState, plan, maxM + 1);
  std::vector<Polynomial> out;
  out.reserve(maxM + 1);
  for (int m = 0; m <= maxM; ++m) out.push_back(series.at(m));
  out[0] = Polynomial(Rat(1));  // empty-diagram normalization
  return out;
}

namespace {

RatSeries length_specialized_series(const EvolutionState& state, int g, int b,
                                    int order, const std::function<Rat(int)>& sVal) {
  if (state.spec().kind != SpectrumKind::Length)
    throw MismatchedModels("needs a length-spectrum model");
  const Spectrum tWant = Spectrum::unit(1, b);
  RatSeries out(order);
  const int xWant = state.spec().variant == Variant::Orientable ? 2 * g - 2 : g - 2;
  for (int k = 0; k <= state.computed_k() && k < order; ++k) {
    Rat sum(0);
    for (const auto& [key, coeff] : state.slice(k).terms()) {
      if (key.xExp != xWant || key.t != tWant) continue;
      Rat v = coeff;
      for (const auto& [i, m] : key.s.entries()) {
        const Rat w = sVal(i);
        if (w == 0) {
          v = 0;
          break;
        }
        for (int r = 0; r < m; ++r) v *= w;
      }
      sum += v;
    }
    out.set(k, sum);
  }
  return out;
}

}  // namespace

RatSeries complete_series(const EvolutionState& lengthState, int g, int b,
                          int order) {
  return length_specialized_series(lengthState, g, b, order,
                                   [](int) { return Rat(1); });
}

RatSeries rainbow_free_series(const EvolutionState& lengthState, int g, int b,
                              int order) {
  return length_specialized_series(lengthState, g, b, order, [](int i) {
    return i <= 2 ? Rat(0) : Rat(1);
  });
}

RatSeries shape_series(const EvolutionState& lengthState, int g, int b, int order) {
  RatSeries shapes = rainbow_free_series(lengthState, g, b, order).shifted(b);
  if (g == 0 && b == 1 && order > 1) shapes.set(1, shapes.at(1) + 1);
  return shapes;
}

std::vector<Rat> length_weight_sums(const EvolutionState& lengthState, int g, int b,
                                    const std::vector<Rat>& weights) {
  const int order = lengthState.computed_k() + 1;
  RatSeries s = length_specialized_series(
      lengthState, g, b, order, [&](int i) {
        return (i >= 1 && i <= static_cast<int>(weights.size())) ? weights[i - 1]
                                                                 : Rat(0);
      });
  return s.coeffs();
}

RatSeries catalan_series(int order) {
  // 1 - 4z, its square root, then (1 - sqrt)/2 shifted down by one.
  RatSeries f(order + 1);
  f.set(0, Rat(1));
  if (order >= 1) f.set(1, Rat(-4));
  RatSeries root = f.sqrt_one();
  RatSeries num = RatSeries::constant(Rat(1), order + 1) - root;
  return num.scaled(Rat(1, 2)).shifted(-1).truncated(order);
}

}  // namespace chord
