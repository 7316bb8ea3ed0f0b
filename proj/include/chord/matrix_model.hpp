#pragma once

#include <cstdint>
#include <vector>

#include "chord/evolution.hpp"
#include "chord/polynomial.hpp"
#include "chord/power_series.hpp"
#include "chord/spectrum.hpp"

namespace chord {

enum class Ensemble { HermitianUnitary, RealSymmetricOrthogonal };

// Gaussian conventions: Hermitian entries have E x_ab x_cd = d_ad d_bc;
// real symmetric entries have E x_ab x_cd = d_ac d_bd + d_ad d_bc, so
// every twisted or untwisted gluing counts with coefficient one.
struct EnsembleConfig {
  Ensemble ensemble = Ensemble::HermitianUnitary;
  int N = 3;
  int p = 0;  // rank of the projector P = diag(1,...,1,0,...,0)
  double s = 0.0;
  long samples = 10000;
  std::uint64_t seed = 1;
};

struct MCEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
};

// E Tr(X+sP)^m as an exact polynomial in the symbols s, p, N, assembled
// from one-backbone boundary-point counts (orientable: Hermitian;
// non-orientable: real symmetric).
Polynomial exact_moment(int m, Variant variant);
double exact_moment_value(int m, Variant variant, double s, int p, int N);

// E prod_m (Tr(X+sP)^m)^{b_m}, disconnected diagrams included via the
// exponential of the connected generating data.
Polynomial exact_product_moment(const Spectrum& bSpec, Variant variant);

MCEstimate sample_trace_powers(const EnsembleConfig& cfg, int m);
MCEstimate sample_trace_powers(const EnsembleConfig& cfg, const Spectrum& bSpec);

// Moment side of the resolvent of X + sP: coefficient m of the result
// (a series in w = 1/z) is the polynomial E Tr(X+sP)^m, so that the
// series equals -z E Tr(X+sP-z)^{-1} at w = 1/z.
PolySeries resolvent_series(const EvolutionState& pointState, int order);

// (1/N) E Tr (A X A* (A X A*)^*)^k with X complex Gaussian of entry
// variance 1/N and A = diag(singvals).
MCEstimate sample_wishart_like(int k, const std::vector<double>& singvals, int N,
                               long samples, std::uint64_t seed);

struct MomentGridCell {
  Ensemble ensemble;
  int N = 0;
  int p = 0;
  int s = 0;
  int m = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  double exact = 0.0;
  double z = 0.0;  // |mean - exact| / stderr (0 when both vanish)
};

// The statistical cross-validation grid: all m <= maxM, p in
// {0, N/2, N}, s in {0, 1}, both ensembles. Draws are shared between
// the cells of one (ensemble, N) block.
std::vector<MomentGridCell> run_moment_grid(int maxM, const std::vector<int>& Ns,
                                            long samples, std::uint64_t seed);

}  // namespace chord
