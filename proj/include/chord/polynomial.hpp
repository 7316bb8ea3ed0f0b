#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chord/rational.hpp"

namespace chord {

// Sparse Laurent polynomial over the rationals in a small set of named
// symbols (s, q, p, N, s1, s2, ...). Exponents may be negative; a
// single-term monomial is therefore invertible, which is exactly the
// amount of division the series toolkit needs.
class Polynomial {
 public:
  // (varId, exponent != 0), sorted by varId.
  using Monomial = std::vector<std::pair<int, int>>;
  using Map = std::map<Monomial, Rat>;

  Polynomial() = default;
  explicit Polynomial(Rat c) {
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
  }
  explicit Polynomial(long c) : Polynomial(Rat(c)) {}

  static int var_id(const std::string& name);
  static const std::string& var_name(int id);

  static Polynomial variable(const std::string& name, int exp = 1) {
    Polynomial p;
    if (exp == 0) return Polynomial(Rat(1));
    p.terms_.emplace(Monomial{{var_id(name), exp}}, Rat(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rat constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(mul_mono(ma, mb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rat& lambda) const {
    Polynomial r;
    if (lambda == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * lambda);
    return r;
  }

  bool operator==(const Polynomial& o) const = default;

  // Inverse of a single-term monomial; nullopt otherwise.
  std::optional<Polynomial> monomial_inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto& [v, e] : inv) e = -e;
    Polynomial r;
    r.terms_.emplace(std::move(inv), Rat(1) / c);
    return r;
  }

  Rat eval(const std::map<int, Rat>& assign) const;

  std::string to_string() const;

 private:
  static Monomial mul_mono(const Monomial& a, const Monomial& b);

  Map terms_;
};

inline Polynomial operator*(const Rat& lambda, const Polynomial& p) {
  return p.scaled(lambda);
}

}  // namespace chord
