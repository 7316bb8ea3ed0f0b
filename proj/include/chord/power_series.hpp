#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chord/polynomial.hpp"
#include "chord/rational.hpp"

namespace chord {

template <class R>
struct RingOps;

template <>
struct RingOps<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static Rat from_rat(const Rat& q) { return q; }
  static std::optional<Rat> try_invert(const Rat& a) {
    if (a == 0) return std::nullopt;
    return Rat(1) / a;
  }
  static Rat scale(const Rat& a, const Rat& q) { return a * q; }
};

template <>
struct RingOps<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rat(1)); }
  static bool is_zero(const Polynomial& a) { return a.is_zero(); }
  static Polynomial from_rat(const Rat& q) { return Polynomial(q); }
  // Full fraction fields are out of scope; only Laurent monomials (and
  // nonzero constants) are units here.
  static std::optional<Polynomial> try_invert(const Polynomial& a) {
    return a.monomial_inverse();
  }
  static Polynomial scale(const Polynomial& a, const Rat& q) { return a.scaled(q); }
};

// Truncated formal power series sum_{i<order} c_i z^i over an exact
// coefficient ring. All operations respect the truncation order; no
// floating point anywhere.
template <class R>
class PowerSeries1 {
 public:
  using Ops = RingOps<R>;

  PowerSeries1() : order_(0) {}
  explicit PowerSeries1(int order) : coeffs_(order, Ops::zero()), order_(order) {
    if (order < 0) throw std::invalid_argument("negative order");
  }
  PowerSeries1(std::vector<R> coeffs, int order)
      : coeffs_(std::move(coeffs)), order_(order) {
    coeffs_.resize(order_, Ops::zero());
  }

  static PowerSeries1 constant(const R& c, int order) {
    PowerSeries1 s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
  }
  static PowerSeries1 identity(int order) {  // the series z
    PowerSeries1 s(order);
    if (order > 1) s.coeffs_[1] = Ops::one();
    return s;
  }

  int order() const { return order_; }
  const R& at(int i) const {
    static const R z = Ops::zero();
    if (i < 0 || i >= order_) return z;
    return coeffs_[i];
  }
  void set(int i, R v) {
    if (i < 0 || i >= order_) throw std::out_of_range("series index");
    coeffs_[i] = std::move(v);
  }
  const std::vector<R>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!Ops::is_zero(c)) return false;
    return true;
  }

  PowerSeries1 truncated(int order) const {
    PowerSeries1 r(std::min(order, order_));
    for (int i = 0; i < r.order_; ++i) r.coeffs_[i] = coeffs_[i];
    return r;
  }

  // Zero-extends to a higher order; the caller asserts that the padded
  // coefficients cannot influence the window it reads.
  PowerSeries1 padded(int order) const {
    if (order <= order_) return truncated(order);
    PowerSeries1 r(order);
    for (int i = 0; i < order_; ++i) r.coeffs_[i] = coeffs_[i];
    return r;
  }

  PowerSeries1 operator+(const PowerSeries1& o) const {
    PowerSeries1 r(std::min(order_, o.order_));
    for (int i = 0; i < r.order_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
  }
  PowerSeries1 operator-(const PowerSeries1& o) const {
    PowerSeries1 r(std::min(order_, o.order_));
    for (int i = 0; i < r.order_; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
  }
  PowerSeries1 operator*(const PowerSeries1& o) const {
    PowerSeries1 r(std::min(order_, o.order_));
    for (int i = 0; i < r.order_; ++i) {
      if (Ops::is_zero(coeffs_[i])) continue;
      for (int j = 0; i + j < r.order_; ++j) {
        if (Ops::is_zero(o.coeffs_[j])) continue;
        r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }

  PowerSeries1 scaled(const R& c) const {
    PowerSeries1 r(order_);
    for (int i = 0; i < order_; ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
  }
  PowerSeries1 scaled_rat(const Rat& q) const {
    PowerSeries1 r(order_);
    for (int i = 0; i < order_; ++i) r.coeffs_[i] = Ops::scale(coeffs_[i], q);
    return r;
  }

  // Multiplies by z^k. Negative k requires the dropped coefficients to
  // vanish; the result keeps the same truncation order.
  PowerSeries1 shifted(int k) const {
    PowerSeries1 r(order_);
    if (k >= 0) {
      for (int i = 0; i + k < order_; ++i) r.coeffs_[i + k] = coeffs_[i];
    } else {
      for (int i = 0; i < -k; ++i)
        if (!Ops::is_zero(coeffs_[i]))
          throw std::domain_error("shift would create a pole");
      for (int i = -k; i < order_; ++i) r.coeffs_[i + k] = coeffs_[i];
    }
    return r;
  }

  // Multiplicative inverse; requires an invertible constant term.
  PowerSeries1 inverse() const {
    if (order_ == 0) return *this;
    auto c0inv = Ops::try_invert(coeffs_[0]);
    if (!c0inv) throw std::domain_error("constant term not invertible");
    PowerSeries1 r(order_);
    r.coeffs_[0] = *c0inv;
    for (int n = 1; n < order_; ++n) {
      R acc = Ops::zero();
      for (int i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
      r.coeffs_[n] = -(acc * *c0inv);
    }
    return r;
  }

  // Square root of a series with constant term 1.
  PowerSeries1 sqrt_one() const {
    if (order_ == 0) return *this;
    if (!(coeffs_[0] == Ops::one()))
      throw std::domain_error("sqrt requires constant term 1");
    PowerSeries1 r(order_);
    r.coeffs_[0] = Ops::one();
    for (int n = 1; n < order_; ++n) {
      R acc = coeffs_[n];
      for (int i = 1; i < n; ++i) acc -= r.coeffs_[i] * r.coeffs_[n - i];
      r.coeffs_[n] = Ops::scale(acc, Rat(1, 2));
    }
    return r;
  }

  // f(g(z)) for g with zero constant term, by Horner evaluation.
  PowerSeries1 compose(const PowerSeries1& g) const {
    int ord = std::min(order_, g.order_);
    if (ord > 0 && !Ops::is_zero(g.at(0)))
      throw std::domain_error("composition needs zero constant term");
    PowerSeries1 gt = g.truncated(ord);
    PowerSeries1 r(ord);
    for (int i = order_ - 1; i >= 0; --i) {
      r = r * gt;
      if (!Ops::is_zero(coeffs_[i]) && ord > 0) r.coeffs_[0] += coeffs_[i];
    }
    return r;
  }

  // Compositional inverse of f = c1 z + c2 z^2 + ... with c1 invertible;
  // solved coefficient by coefficient, dividing only by c1.
  PowerSeries1 comp_inverse() const {
    if (order_ < 2) throw std::domain_error("order too small to invert");
    if (!Ops::is_zero(coeffs_[0]))
      throw std::domain_error("compositional inverse needs zero constant term");
    auto c1inv = Ops::try_invert(coeffs_[1]);
    if (!c1inv) throw std::domain_error("linear coefficient not invertible");
    PowerSeries1 g(order_);
    g.coeffs_[1] = *c1inv;
    // Maintain powers of g mod z^order to read off f(g(z)).
    for (int n = 2; n < order_; ++n) {
      // Coefficient of z^n in f(g) using the current (partial) g equals
      // the defect; correct g_n so that f(g) = z holds at order n.
      PowerSeries1 fg = compose_prefix(g, n + 1);
      R defect = fg.at(n);
      g.coeffs_[n] = -(defect * *c1inv);
    }
    return g;
  }

  bool operator==(const PowerSeries1& o) const {
    if (order_ != o.order_) return false;
    for (int i = 0; i < order_; ++i)
      if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
  }

 private:
  PowerSeries1 compose_prefix(const PowerSeries1& g, int ord) const {
    PowerSeries1 f = truncated(ord);
    return f.compose(g.truncated(ord));
  }

  std::vector<R> coeffs_;
  int order_;
};

using RatSeries = PowerSeries1<Rat>;
using PolySeries = PowerSeries1<Polynomial>;

}  // namespace chord
