#include "chord/evolution.hpp"

#include <utility>

namespace chord {

namespace {

bool within(const Truncation& tr, const Spectrum& t) {
  return t.size() <= tr.maxBackbones && t.weight() <= tr.maxBackboneWeight;
}

// Emits coeff * s^(base - e_v + e_a + e_b) into out.
void emit_split(Series& out, const TermKey& key, const Rat& coeff, int v, int a,
                int b) {
  TermKey nk = key;
  nk.s.bump(v, -1);
  nk.s.bump(a, 1);
  nk.s.bump(b, 1);
  out.add_term(nk, coeff);
}

}  // namespace

Series apply_linear_operator(LinearOpKind op, const Series& s) {
  Series out;
  for (const auto& [key, coeff] : s.terms()) {
    switch (op) {
      case LinearOpKind::PointSplit:
        for (const auto& [v, m] : key.s.entries()) {
          if (v < 2) continue;
          const Rat f = coeff * make_rat(static_cast<long>(v) * m, 2);
          for (int j = 0; j <= v - 2; ++j) emit_split(out, key, f, v, j, v - 2 - j);
        }
        break;
      case LinearOpKind::PointCrossCap:
        for (const auto& [v, m] : key.s.entries()) {
          if (v < 2) continue;
          TermKey nk = key;
          nk.s.bump(v, -1);
          nk.s.bump(v - 2, 1);
          out.add_term(nk, coeff * make_rat(static_cast<long>(v) * (v - 1) * m, 2));
        }
        break;
      case LinearOpKind::PointMerge:
      case LinearOpKind::LengthMerge: {
        const int shift = op == LinearOpKind::PointMerge ? -2 : 2;
        for (const auto& [a, ma] : key.s.entries()) {
          if (a < 1) continue;
          for (const auto& [b, mb] : key.s.entries()) {
            if (b < 1) continue;
            const long deriv = a == b ? static_cast<long>(ma) * (ma - 1)
                                      : static_cast<long>(ma) * mb;
            if (deriv == 0) continue;
            if (a + b + shift < 0) continue;
            TermKey nk = key;
            nk.s.bump(a, -1);
            nk.s.bump(b, -1);
            nk.s.bump(a + b + shift, 1);
            out.add_term(nk, coeff * make_rat(static_cast<long>(a) * b * deriv, 2));
          }
        }
        break;
      }
      case LinearOpKind::LengthSplit:
        for (const auto& [v, m] : key.s.entries()) {
          if (v < 1) continue;
          const Rat f = coeff * make_rat(static_cast<long>(v) * m, 2);
          for (int j = 1; j <= v + 1; ++j) emit_split(out, key, f, v, j, v + 2 - j);
        }
        break;
      case LinearOpKind::LengthCrossCap:
        for (const auto& [v, m] : key.s.entries()) {
          if (v < 1) continue;
          TermKey nk = key;
          nk.s.bump(v, -1);
          nk.s.bump(v + 2, 1);
          out.add_term(nk, coeff * make_rat(static_cast<long>(v) * (v + 1) * m, 2));
        }
        break;
    }
  }
  return out;
}

Series apply_bilinear(BilinearOpKind op, const Series& a, const Series& b,
                      const Truncation& trunc) {
  const int shift = op == BilinearOpKind::PointBridge ? -2 : 2;
  Series out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Spectrum t = ka.t + kb.t;
      if (!within(trunc, t)) continue;
      for (const auto& [va, ma] : ka.s.entries()) {
        if (va < 1) continue;
        for (const auto& [vb, mb] : kb.s.entries()) {
          if (vb < 1) continue;
          if (va + vb + shift < 0) continue;
          TermKey nk;
          nk.xExp = ka.xExp + kb.xExp;
          nk.t = t;
          nk.s = ka.s + kb.s;
          nk.s.bump(va, -1);
          nk.s.bump(vb, -1);
          nk.s.bump(va + vb + shift, 1);
          out.add_term(nk, ca * cb *
                               make_rat(static_cast<long>(va) * vb * ma * mb, 2));
        }
      }
    }
  }
  return out;
}

Series lambda1(const Series& s) {
  Series out;
  for (const auto& [key, coeff] : s.terms()) {
    for (const auto& [v, m] : key.s.entries()) {
      if (v < 1) continue;
      TermKey nk = key;
      nk.s.bump(v, -1);
      nk.s.bump(v + 1, 1);
      out.add_term(nk, coeff * (static_cast<long>(v) * m));
    }
  }
  return out;
}

EvolutionState::EvolutionState(ModelSpec spec) : spec_(std::move(spec)) {
  const auto& tr = spec_.trunc;
  if (tr.maxK < 0 || tr.maxBackbones < 1 || tr.maxBackboneWeight < 1)
    throw std::invalid_argument("bad truncation bounds");
  if (spec_.kind == SpectrumKind::Vertex && spec_.variant == Variant::NonOrientable)
    throw MismatchedModels("vertex spectrum model is orientable only");
  Series ic;
  switch (spec_.kind) {
    case SpectrumKind::Point:
      if (spec_.singleBackboneSize > 0) {
        if (spec_.singleBackboneSize > tr.maxBackboneWeight)
          throw TruncationExceeded("initial backbone size above weight bound");
        ic.add_term({-2, Spectrum::unit(spec_.singleBackboneSize),
                     Spectrum::unit(spec_.singleBackboneSize)},
                    Rat(1));
      } else {
        for (int i = 1; i <= tr.maxBackboneWeight; ++i)
          ic.add_term({-2, Spectrum::unit(i), Spectrum::unit(i)}, Rat(1));
      }
      break;
    case SpectrumKind::Length:
      ic.add_term({-2, Spectrum::unit(1), Spectrum::unit(1)}, Rat(1));
      break;
    case SpectrumKind::Vertex:
      ic.add_term({-2, Spectrum::unit(1, 2), Spectrum()}, Rat(1));
      break;
  }
  slices_.push_back(std::move(ic));
}

EvolutionState EvolutionState::stepped() const {
  const int k = computed_k();
  if (k >= spec_.trunc.maxK) return *this;
  const bool point = spec_.kind == SpectrumKind::Point;
  const bool nonor = spec_.variant == Variant::NonOrientable;
  const Series& top = slices_[k];

  const LinearOpKind split = point ? LinearOpKind::PointSplit : LinearOpKind::LengthSplit;
  const LinearOpKind cross =
      point ? LinearOpKind::PointCrossCap : LinearOpKind::LengthCrossCap;
  const LinearOpKind merge = point ? LinearOpKind::PointMerge : LinearOpKind::LengthMerge;

  Series next = apply_linear_operator(split, top);
  if (nonor) next += apply_linear_operator(cross, top).x_shifted(1);
  next.add_scaled(apply_linear_operator(merge, top).x_shifted(2), Rat(nonor ? 2 : 1));

  if (spec_.kind != SpectrumKind::Vertex && spec_.trunc.maxBackbones > 1) {
    const BilinearOpKind bridge =
        point ? BilinearOpKind::PointBridge : BilinearOpKind::LengthBridge;
    Series quad;
    for (int a = 0; a <= k; ++a)
      quad += apply_bilinear(bridge, slices_[a], slices_[k - a], spec_.trunc);
    next.add_scaled(quad.x_shifted(2), Rat(nonor ? 2 : 1));
  }

  EvolutionState out = *this;
  out.slices_.push_back(next.scaled(make_rat(1, k + 1)));
  return out;
}

EvolutionState EvolutionState::evolved() const {
  EvolutionState s = *this;
  while (s.computed_k() < spec_.trunc.maxK) s = s.stepped();
  return s;
}

void EvolutionState::check_integrality() const {
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    for (const auto& [key, coeff] : slices_[k].terms()) {
      const Rat scaled = coeff * Rat(factorial(static_cast<unsigned>(key.t.size())));
      if (!is_integer(scaled) || scaled < 0)
        throw IntegralityViolation("slice " + std::to_string(k) + " term " +
                                   key.s.to_string() + " has coefficient " +
                                   rat_to_string(coeff));
    }
  }
}

Int extract_count(const EvolutionState& state, const DiagramType& t) {
  if (!validate_type(t)) throw std::invalid_argument("inconsistent diagram type");
  const ModelSpec& spec = state.spec();
  const bool wantNonor = t.orient == Orientability::NonOrientableAllowed;
  if (wantNonor != (spec.variant == Variant::NonOrientable))
    throw MismatchedModels("type orientability does not match the model variant");
  if (t.k > state.computed_k()) throw TruncationExceeded("k above computed slices");

  const int xExp = wantNonor ? t.genusOrH - 2 : 2 * t.genusOrH - 2;
  const long b = t.bSpec.size();
  TermKey key;
  key.xExp = xExp;
  switch (spec.kind) {
    case SpectrumKind::Point:
      if (t.pSpec)
        throw MismatchedModels("point-spectrum model cannot resolve a length spectrum");
      if (b > spec.trunc.maxBackbones || t.bSpec.weight() > spec.trunc.maxBackboneWeight)
        throw TruncationExceeded("backbone spectrum outside bounds");
      if (spec.singleBackboneSize > 0 &&
          t.bSpec != Spectrum::unit(spec.singleBackboneSize))
        throw TruncationExceeded("state restricted to one backbone size");
      key.s = t.nSpec;
      key.t = t.bSpec;
      break;
    case SpectrumKind::Length:
      if (!t.pSpec || t.l != 0)
        throw MismatchedModels("length-spectrum model needs a complete type with pSpec");
      if (b > spec.trunc.maxBackbones)
        throw TruncationExceeded("backbone count outside bounds");
      key.s = *t.pSpec;
      key.t = Spectrum::unit(1, static_cast<int>(b));
      break;
    case SpectrumKind::Vertex:
      throw MismatchedModels("use extract_vertex_count for the vertex model");
  }

  const Rat value =
      state.slice(t.k).coefficient_of(key) * Rat(factorial(static_cast<unsigned>(b)));
  if (!is_integer(value) || value < 0)
    throw IntegralityViolation("count for " + t.to_string() + " is " +
                               rat_to_string(value));
  return value.get_num();
}

Int extract_vertex_count(const EvolutionState& state, int g, int k,
                         const Spectrum& vSpec) {
  if (state.spec().kind != SpectrumKind::Vertex)
    throw MismatchedModels("state is not a vertex-spectrum model");
  if (k < 1 || k - 1 > state.computed_k())
    throw TruncationExceeded("chord count outside computed slices");
  const Rat value =
      state.slice(k - 1).coefficient_of({2 * g - 2, vSpec, Spectrum()});
  if (!is_integer(value) || value < 0)
    throw IntegralityViolation("vertex-spectrum count is " + rat_to_string(value));
  return value.get_num();
}

bool lambda1_check(const EvolutionState& vertexState,
                   const EvolutionState& lengthState, int maxK) {
  if (vertexState.spec().kind != SpectrumKind::Vertex ||
      lengthState.spec().kind != SpectrumKind::Length ||
      lengthState.spec().variant != Variant::Orientable)
    throw MismatchedModels("lambda1_check needs a vertex state and an orientable "
                           "length state");
  if (vertexState.computed_k() < maxK - 1 || lengthState.computed_k() < maxK)
    throw TruncationExceeded("states not computed far enough");
  for (int k = 1; k <= maxK; ++k) {
    Series lhs = lambda1(vertexState.slice(k - 1)).scaled(make_rat(1, 2));
    // One-backbone part of the length slice, with the backbone-count
    // variable stripped so the two sides live on the same keys.
    Series rhs;
    for (const auto& [key, coeff] : lengthState.slice(k).terms()) {
      if (key.t != Spectrum::unit(1)) continue;
      rhs.add_term({key.xExp, key.s, Spectrum()}, coeff * k);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace chord
