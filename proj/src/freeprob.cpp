#include "chord/freeprob.hpp"

namespace chord {

namespace {

template <class R>
void require_normalized(const PowerSeries1<R>& moments) {
  if (moments.order() < 1 || !(moments.at(0) == RingOps<R>::one()))
    throw std::invalid_argument("moment sequence must start with 1");
}

}  // namespace

template <class R>
PowerSeries1<R> r_transform(const PowerSeries1<R>& moments, int order) {
  require_normalized(moments);
  const int n = std::min(order + 1, moments.order());
  // Cauchy series in w = 1/z: w + M_1 w^2 + ... + M_{n-1} w^n.
  PowerSeries1<R> g(n + 1);
  for (int m = 0; m < n; ++m) g.set(m + 1, moments.at(m));
  PowerSeries1<R> k = g.comp_inverse();
  PowerSeries1<R> h = k.shifted(-1).truncated(n);  // 1 + e_1 u + ...
  PowerSeries1<R> hinv = h.inverse();
  hinv.set(0, RingOps<R>::zero());
  return hinv.shifted(-1).truncated(std::min(order, n - 1));
}

template <class R>
PowerSeries1<R> moments_from_r(const PowerSeries1<R>& r, int order) {
  // Solve H = 1 + w H R(wH); H(w) = sum_m M_m w^m. Coefficients of R
  // beyond its own order only touch moments above `order`, so padding
  // with zeros is harmless.
  PowerSeries1<R> rr = r.padded(order);
  PowerSeries1<R> h = PowerSeries1<R>::constant(RingOps<R>::one(), order);
  for (int pass = 1; pass < order; ++pass) {
    PowerSeries1<R> wh = h.shifted(1);
    PowerSeries1<R> next = wh * rr.compose(wh);
    next.set(0, RingOps<R>::one());
    if (next == h) break;
    h = next;
  }
  return h;
}

template <class R>
PowerSeries1<R> s_transform(const PowerSeries1<R>& moments, int order) {
  require_normalized(moments);
  const int n = std::min(order + 1, moments.order());
  if (n < 2 || !RingOps<R>::try_invert(moments.at(1)))
    throw NonInvertibleFirstMoment("first moment is not invertible");
  PowerSeries1<R> m(n);
  for (int i = 1; i < n; ++i) m.set(i, moments.at(i));
  PowerSeries1<R> minv = m.comp_inverse();
  PowerSeries1<R> zp1 = PowerSeries1<R>::constant(RingOps<R>::one(), n - 1) +
                        PowerSeries1<R>::identity(n - 1);
  return (zp1 * minv.shifted(-1).truncated(n - 1)).truncated(std::min(order, n - 1));
}

template <class R>
PowerSeries1<R> moments_from_s(const PowerSeries1<R>& s, int order) {
  const int n = std::min(order, s.order() + 1);
  // Minv(z) = z S(z) / (1+z); invert compositionally, restore mass 1.
  // The shift makes the padded top coefficient of S irrelevant here.
  PowerSeries1<R> zp1 = PowerSeries1<R>::constant(RingOps<R>::one(), n) +
                        PowerSeries1<R>::identity(n);
  PowerSeries1<R> minv = (s.padded(n).shifted(1) * zp1.inverse()).truncated(n);
  if (n < 2 || !RingOps<R>::try_invert(minv.at(1)))
    throw NonInvertibleFirstMoment("S-transform has no invertible leading term");
  PowerSeries1<R> m = minv.comp_inverse();
  m.set(0, RingOps<R>::one());
  return m;
}

template <class R>
PowerSeries1<R> free_add(const PowerSeries1<R>& a, const PowerSeries1<R>& b,
                         int order) {
  PowerSeries1<R> ra = r_transform(a, order);
  PowerSeries1<R> rb = r_transform(b, order);
  return moments_from_r(ra + rb, order);
}

template <class R>
PowerSeries1<R> free_mul(const PowerSeries1<R>& a, const PowerSeries1<R>& b,
                         int order) {
  PowerSeries1<R> sa = s_transform(a, order);
  PowerSeries1<R> sb = s_transform(b, order);
  return moments_from_s(sa * sb, order);
}

template RatSeries r_transform(const RatSeries&, int);
template PolySeries r_transform(const PolySeries&, int);
template RatSeries moments_from_r(const RatSeries&, int);
template PolySeries moments_from_r(const PolySeries&, int);
template RatSeries s_transform(const RatSeries&, int);
template PolySeries s_transform(const PolySeries&, int);
template RatSeries moments_from_s(const RatSeries&, int);
template PolySeries moments_from_s(const PolySeries&, int);
template RatSeries free_add(const RatSeries&, const RatSeries&, int);
template PolySeries free_add(const PolySeries&, const PolySeries&, int);
template RatSeries free_mul(const RatSeries&, const RatSeries&, int);
template PolySeries free_mul(const PolySeries&, const PolySeries&, int);

RatSeries semicircle_moments(int order) {
  RatSeries s(order);
  Rat cat(1);
  for (int j = 0; 2 * j < order; ++j) {
    s.set(2 * j, cat);
    cat = cat * make_rat(2 * (2 * j + 1), j + 2);  // Cat_{j+1}/Cat_j
  }
  return s;
}

RatSeries marchenko_pastur_moments(int order) {
  RatSeries s(order);
  Rat cat(1);
  for (int m = 0; m < order; ++m) {
    s.set(m, cat);
    cat = cat * make_rat(2 * (2 * m + 1), m + 2);
  }
  return s;
}

PolySeries projector_moments(int order) {
  PolySeries s(order);
  s.set(0, Polynomial(Rat(1)));
  const Polynomial q = Polynomial::variable("q");
  const Polynomial sv = Polynomial::variable("s");
  Polynomial cur = q;
  for (int m = 1; m < order; ++m) {
    cur = m == 1 ? q * sv : cur * sv;
    s.set(m, cur);
  }
  return s;
}

RatSeries genus0_length_gf(const std::vector<Rat>& sWeights, int order) {
  if (sWeights.empty() || sWeights[0] == 0)
    throw ZeroLeadingWeight("leading boundary-length weight must be nonzero");
  const int n = order + 1;
  RatSeries nuMoments(n);
  nuMoments.set(0, Rat(1));
  for (int m = 1; m < n; ++m)
    nuMoments.set(m, m <= static_cast<int>(sWeights.size()) ? sWeights[m - 1]
                                                            : Rat(0));
  RatSeries sNu = s_transform(nuMoments, n);
  const int w = sNu.order();
  RatSeries zp1 = RatSeries::constant(Rat(1), w) + RatSeries::identity(w);
  RatSeries zp1inv = zp1.inverse();
  RatSeries sLambda = sNu * sNu * zp1inv;
  RatSeries kSeries = (sLambda * zp1inv).shifted(1);  // z/(1+z) S_lambda
  RatSeries mLambda = kSeries.comp_inverse();
  RatSeries out = mLambda.truncated(order);
  if (order > 0) out.set(0, Rat(1));
  return out;
}

}  // namespace chord
