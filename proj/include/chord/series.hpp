#pragma once

#include <compare>
#include <map>
#include <string>

#include "chord/rational.hpp"
#include "chord/spectrum.hpp"

namespace chord {

// Key of one generating-function term: x^xExp * s^sSpec * t^tSpec.
// xExp may be negative (the chordless backbone carries x^-2).
struct TermKey {
  int xExp = 0;
  Spectrum s;
  Spectrum t;

  auto operator<=>(const TermKey&) const = default;
  bool operator==(const TermKey&) const = default;
};

// One y-degree slice of a generating function: a finite term map with
// exact rational coefficients. Keys iterate in canonical (xExp, s, t)
// order, which makes serialization and golden files stable.
class Series {
 public:
  using Map = std::map<TermKey, Rat>;

  Series() = default;

  static Series monomial(TermKey key, Rat coeff = Rat(1)) {
    Series s;
    s.add_term(std::move(key), std::move(coeff));
    return s;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  void add_term(const TermKey& key, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coefficient_of(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Series& operator+=(const Series& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  Series& add_scaled(const Series& o, const Rat& lambda) {
    if (lambda == 0) return *this;
    for (const auto& [k, c] : o.terms_) add_term(k, c * lambda);
    return *this;
  }

  Series operator+(const Series& o) const {
    Series r = *this;
    r += o;
    return r;
  }

  Series scaled(const Rat& lambda) const {
    Series r;
    if (lambda == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * lambda);
    return r;
  }

  // Adds e to every term's x exponent.
  Series x_shifted(int e) const {
    if (e == 0) return *this;
    Series r;
    for (const auto& [k, c] : terms_) {
      TermKey nk = k;
      nk.xExp += e;
      r.terms_.emplace(std::move(nk), c);
    }
    return r;
  }

  // Sets x = 1 by folding all x exponents to zero.
  Series x_folded() const {
    Series r;
    for (const auto& [k, c] : terms_) {
      TermKey nk = k;
      nk.xExp = 0;
      r.add_term(nk, c);
    }
    return r;
  }

  bool operator==(const Series& o) const = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += rat_to_string(c);
      if (k.xExp != 0) out += "*x^" + std::to_string(k.xExp);
      if (!k.s.empty()) out += "*s[" + k.s.to_string() + "]";
      if (!k.t.empty()) out += "*t[" + k.t.to_string() + "]";
    }
    return out;
  }

 private:
  Map terms_;
};

}  // namespace chord
