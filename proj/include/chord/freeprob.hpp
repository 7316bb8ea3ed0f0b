#pragma once

#include <stdexcept>
#include <vector>

#include "chord/power_series.hpp"

namespace chord {

struct NonInvertibleFirstMoment : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroLeadingWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Moment sequences are power series with coefficient m = the m-th
// moment; index 0 must hold 1 (the total mass). Cauchy transforms are
// stored in w = 1/z, so G(z) = sum M_m / z^{m+1} becomes w + M_1 w^2 + ...

// R-transform: the unique series with R(G(z)) + 1/G(z) = z, computed by
// compositional inversion of the Cauchy series. Result has `order`
// coefficients (R_0, R_1, ...).
template <class R>
PowerSeries1<R> r_transform(const PowerSeries1<R>& moments, int order);

// Moments back from an R-transform: solves H = 1 + w H R(w H) for
// H = G(1/w)/w by fixed-point iteration (one new coefficient per pass).
template <class R>
PowerSeries1<R> moments_from_r(const PowerSeries1<R>& r, int order);

// S-transform (z+1)/z * Minv(z), Minv the compositional inverse of the
// moment generating function sum_{m>=1} M_m z^m.
template <class R>
PowerSeries1<R> s_transform(const PowerSeries1<R>& moments, int order);

template <class R>
PowerSeries1<R> moments_from_s(const PowerSeries1<R>& s, int order);

// Free additive convolution: R-transforms add.
template <class R>
PowerSeries1<R> free_add(const PowerSeries1<R>& a, const PowerSeries1<R>& b,
                         int order);

// Free multiplicative convolution: S-transforms multiply.
template <class R>
PowerSeries1<R> free_mul(const PowerSeries1<R>& a, const PowerSeries1<R>& b,
                         int order);

// Standard moment sequences.
RatSeries semicircle_moments(int order);          // 1, 0, 1, 0, 2, 0, 5, ...
RatSeries marchenko_pastur_moments(int order);    // 1, 1, 2, 5, 14, ...
PolySeries projector_moments(int order);          // 1, qs, qs^2, ... (symbols q, s)

// Genus-zero one-backbone boundary-length generating function from the
// squared-factor matrix limit: 1 + Kinv(z) with
// K(z) = z/(1+z) * S_nu(z)^2/(1+z), s_k the k-th weight.
RatSeries genus0_length_gf(const std::vector<Rat>& sWeights, int order);

}  // namespace chord
