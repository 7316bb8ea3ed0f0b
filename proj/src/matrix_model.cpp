#include "chord/matrix_model.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <random>

namespace chord {

namespace {

using Cplx = std::complex<double>;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Welford {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  MCEstimate estimate() const {
    MCEstimate e;
    e.samples = n;
    e.mean = mean;
    e.stderr_ = n > 1 ? std::sqrt(m2 / (static_cast<double>(n) - 1) /
                                  static_cast<double>(n))
                      : 0.0;
    return e;
  }
};

template <class T>
void matmul(int n, const std::vector<T>& a, const std::vector<T>& b,
            std::vector<T>& c) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T acc{};
      for (int k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + j];
      c[i * n + j] = acc;
    }
}

// tr(Y^m) for m = 0..maxM; Y Hermitian so traces are real.
template <class T>
void trace_powers(int n, const std::vector<T>& y, int maxM, double* out) {
  out[0] = static_cast<double>(n);
  if (maxM < 1) return;
  std::vector<T> cur = y, next(n * n);
  for (int m = 1; m <= maxM; ++m) {
    if (m > 1) {
      matmul(n, cur, y, next);
      cur.swap(next);
    }
    T tr{};
    for (int i = 0; i < n; ++i) tr += cur[i * n + i];
    if constexpr (std::is_same_v<T, Cplx>)
      out[m] = tr.real();
    else
      out[m] = tr;
  }
}

void sample_hermitian(int n, std::mt19937_64& rng,
                      std::normal_distribution<double>& normal,
                      std::vector<Cplx>& x) {
  constexpr double invSqrt2 = 0.7071067811865475244;
  for (int a = 0; a < n; ++a) {
    x[a * n + a] = Cplx(normal(rng), 0.0);
    for (int b = a + 1; b < n; ++b) {
      const Cplx v(normal(rng) * invSqrt2, normal(rng) * invSqrt2);
      x[a * n + b] = v;
      x[b * n + a] = std::conj(v);
    }
  }
}

void sample_real_symmetric(int n, std::mt19937_64& rng,
                           std::normal_distribution<double>& normal,
                           std::vector<double>& x) {
  constexpr double sqrt2 = 1.4142135623730950488;
  for (int a = 0; a < n; ++a) {
    x[a * n + a] = normal(rng) * sqrt2;
    for (int b = a + 1; b < n; ++b) {
      const double v = normal(rng);
      x[a * n + b] = v;
      x[b * n + a] = v;
    }
  }
}

Polynomial poly_pow(const Polynomial& base, int e) {
  Polynomial r(Rat(1));
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Polynomial sym_s() { return Polynomial::variable("s"); }
Polynomial sym_p() { return Polynomial::variable("p"); }
Polynomial sym_N() { return Polynomial::variable("N"); }

// s^l N^{n0} p^{parts with a marked point} from a boundary-point term.
Polynomial term_weight(const Spectrum& nSpec) {
  const long l = nSpec.weight();
  const int n0 = nSpec.mult(0);
  const long nPlus = nSpec.size() - n0;
  return poly_pow(sym_s(), static_cast<int>(l)) * poly_pow(sym_N(), n0) *
         poly_pow(sym_p(), static_cast<int>(nPlus));
}

}  // namespace

Polynomial exact_moment(int m, Variant variant) {
  if (m < 0) throw std::invalid_argument("negative moment");
  if (m == 0) return sym_N();
  ModelSpec spec{SpectrumKind::Point, variant, {m / 2, 1, m}, m};
  EvolutionState state = evolve(spec);
  Polynomial out;
  for (int k = 0; k <= state.computed_k(); ++k)
    for (const auto& [key, coeff] : state.slice(k).terms())
      out += term_weight(key.s).scaled(coeff);
  return out;
}

double exact_moment_value(int m, Variant variant, double s, int p, int N) {
  // Exact rational evaluation only at integer couplings; the grid uses
  // s in {0, 1} so this stays exact.
  const Polynomial poly = exact_moment(m, variant);
  std::map<int, Rat> assign{{Polynomial::var_id("s"), Rat(static_cast<long>(s))},
                            {Polynomial::var_id("p"), Rat(p)},
                            {Polynomial::var_id("N"), Rat(N)}};
  return poly.eval(assign).get_d();
}

Polynomial exact_product_moment(const Spectrum& bSpec, Variant variant) {
  const int b0 = bSpec.mult(0);
  Spectrum rest = bSpec;
  if (b0 > 0) rest.bump(0, -b0);
  Polynomial prefactor = poly_pow(sym_N(), b0);
  if (rest.empty()) return prefactor;

  const long w = rest.weight();
  const int b = static_cast<int>(rest.size());
  ModelSpec spec{SpectrumKind::Point, variant,
                 {static_cast<int>(w / 2), b, w}, 0};
  EvolutionState state = evolve(spec);

  // Connected weights per backbone spectrum, then the exponential
  // restricted to sub-spectra of the target.
  std::map<Spectrum, Polynomial> connected;
  for (int k = 0; k <= state.computed_k(); ++k)
    for (const auto& [key, coeff] : state.slice(k).terms()) {
      if (!rest.minus(key.t)) continue;
      connected[key.t] += term_weight(key.s).scaled(coeff);
    }

  std::map<Spectrum, Polynomial> total = connected;
  std::map<Spectrum, Polynomial> power = connected;
  for (int j = 2; j <= b; ++j) {
    std::map<Spectrum, Polynomial> next;
    for (const auto& [ta, pa] : power)
      for (const auto& [tb, pb] : connected) {
        Spectrum t = ta + tb;
        if (!rest.minus(t)) continue;
        next[t] += pa * pb;
      }
    for (auto& [t, poly] : next) {
      poly = poly.scaled(Rat(1, j));
      total[t] += poly;
    }
    power = std::move(next);
  }

  // Traces of equal size are identical factors of the product, so the
  // generating-function coefficient is scaled by the multi-index
  // factorial prod_i b_i!, not by (sum b_i)!.
  Int multiFac(1);
  for (const auto& [size, mult] : rest.entries())
    multiFac *= factorial(static_cast<unsigned>(mult));
  auto it = total.find(rest);
  Polynomial coeff = it == total.end() ? Polynomial() : it->second;
  return prefactor * coeff.scaled(Rat(multiFac));
}

namespace {

template <class T>
MCEstimate run_trace_sampler(const EnsembleConfig& cfg, int maxM,
                             const std::function<double(const double*)>& value) {
  std::mt19937_64 rng(mix_seed(cfg.seed, 0));
  std::normal_distribution<double> normal;
  const int n = cfg.N;
  std::vector<T> x(n * n);
  std::vector<double> traces(maxM + 1);
  Welford acc;
  for (long it = 0; it < cfg.samples; ++it) {
    if constexpr (std::is_same_v<T, Cplx>)
      sample_hermitian(n, rng, normal, x);
    else
      sample_real_symmetric(n, rng, normal, x);
    for (int a = 0; a < cfg.p; ++a) x[a * n + a] += cfg.s;
    trace_powers(n, x, maxM, traces.data());
    acc.push(value(traces.data()));
  }
  return acc.estimate();
}

}  // namespace

MCEstimate sample_trace_powers(const EnsembleConfig& cfg, int m) {
  auto value = [m](const double* tr) { return tr[m]; };
  if (cfg.ensemble == Ensemble::HermitianUnitary)
    return run_trace_sampler<Cplx>(cfg, m, value);
  return run_trace_sampler<double>(cfg, m, value);
}

MCEstimate sample_trace_powers(const EnsembleConfig& cfg, const Spectrum& bSpec) {
  const int maxM = std::max(bSpec.max_index(), 0);
  auto value = [&bSpec](const double* tr) {
    double v = 1.0;
    for (const auto& [i, mult] : bSpec.entries())
      for (int r = 0; r < mult; ++r) v *= tr[i];
    return v;
  };
  if (cfg.ensemble == Ensemble::HermitianUnitary)
    return run_trace_sampler<Cplx>(cfg, maxM, value);
  return run_trace_sampler<double>(cfg, maxM, value);
}

PolySeries resolvent_series(const EvolutionState& pointState, int order) {
  const ModelSpec& spec = pointState.spec();
  if (spec.kind != SpectrumKind::Point || spec.singleBackboneSize != 0)
    throw MismatchedModels("needs a point model with the full initial condition");
  if (order - 1 > spec.trunc.maxBackboneWeight)
    throw TruncationExceeded("order above the backbone weight bound");
  PolySeries out(order);
  if (order > 0) out.set(0, sym_N());
  for (int k = 0; k <= pointState.computed_k(); ++k)
    for (const auto& [key, coeff] : pointState.slice(k).terms()) {
      if (key.t.size() != 1) continue;
      const int m = key.t.max_index();
      if (m >= order) continue;
      Polynomial acc = out.at(m);
      acc += term_weight(key.s).scaled(coeff);
      out.set(m, std::move(acc));
    }
  return out;
}

MCEstimate sample_wishart_like(int k, const std::vector<double>& singvals, int N,
                               long samples, std::uint64_t seed) {
  if (static_cast<int>(singvals.size()) != N)
    throw std::invalid_argument("need one singular value per row");
  std::mt19937_64 rng(mix_seed(seed, 0x77));
  std::normal_distribution<double> normal;
  const double ent = 1.0 / std::sqrt(2.0 * N);  // entry variance 1/N
  std::vector<Cplx> w(N * N), bmat(N * N), cur(N * N), next(N * N);
  Welford acc;
  for (long it = 0; it < samples; ++it) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        w[i * N + j] = singvals[i] * singvals[j] *
                       Cplx(normal(rng) * ent, normal(rng) * ent);
    // B = W W^dagger
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Cplx s{};
        for (int r = 0; r < N; ++r) s += w[i * N + r] * std::conj(w[j * N + r]);
        bmat[i * N + j] = s;
      }
    cur = bmat;
    for (int pw = 1; pw < k; ++pw) {
      matmul(N, cur, bmat, next);
      cur.swap(next);
    }
    double tr = 0;
    for (int i = 0; i < N; ++i) tr += cur[i * N + i].real();
    acc.push(tr / N);
  }
  return acc.estimate();
}

std::vector<MomentGridCell> run_moment_grid(int maxM, const std::vector<int>& Ns,
                                            long samples, std::uint64_t seed) {
  std::vector<MomentGridCell> cells;
  int group = 0;
  for (Ensemble ens : {Ensemble::HermitianUnitary, Ensemble::RealSymmetricOrthogonal}) {
    const Variant variant = ens == Ensemble::HermitianUnitary
                                ? Variant::Orientable
                                : Variant::NonOrientable;
    std::vector<Polynomial> exact(maxM + 1);
    for (int m = 0; m <= maxM; ++m) exact[m] = exact_moment(m, variant);

    for (int N : Ns) {
      const std::vector<int> ps{0, N / 2, N};
      std::mt19937_64 rng(mix_seed(seed, ++group));
      std::normal_distribution<double> normal;
      // accumulators indexed [pIdx][s][m]; the s = 0 chain reuses p = 0.
      std::vector<Welford> acc(ps.size() * 2 * (maxM + 1));
      auto slot = [&](std::size_t pi, int s, int m) -> Welford& {
        return acc[(pi * 2 + s) * (maxM + 1) + m];
      };
      std::vector<Cplx> xc(N * N), yc(N * N);
      std::vector<double> xr(N * N), yr(N * N);
      std::vector<double> traces(maxM + 1);
      for (long it = 0; it < samples; ++it) {
        if (ens == Ensemble::HermitianUnitary)
          sample_hermitian(N, rng, normal, xc);
        else
          sample_real_symmetric(N, rng, normal, xr);
        for (std::size_t pi = 0; pi < ps.size(); ++pi) {
          for (int s = 0; s <= 1; ++s) {
            if (s == 0 && pi > 0) continue;  // Y = X regardless of p
            if (ens == Ensemble::HermitianUnitary) {
              yc = xc;
              if (s) for (int a = 0; a < ps[pi]; ++a) yc[a * N + a] += 1.0;
              trace_powers(N, yc, maxM, traces.data());
            } else {
              yr = xr;
              if (s) for (int a = 0; a < ps[pi]; ++a) yr[a * N + a] += 1.0;
              trace_powers(N, yr, maxM, traces.data());
            }
            for (int m = 0; m <= maxM; ++m) slot(pi, s, m).push(traces[m]);
          }
        }
      }
      for (std::size_t pi = 0; pi < ps.size(); ++pi)
        for (int s = 0; s <= 1; ++s)
          for (int m = 0; m <= maxM; ++m) {
            const Welford& w = (s == 0) ? slot(0, 0, m) : slot(pi, 1, m);
            MomentGridCell cell;
            cell.ensemble = ens;
            cell.N = N;
            cell.p = ps[pi];
            cell.s = s;
            cell.m = m;
            MCEstimate est = w.estimate();
            cell.mean = est.mean;
            cell.stderr_ = est.stderr_;
            cell.exact = exact_moment_value(m, variant, s, ps[pi], N);
            cell.z = cell.stderr_ > 0
                         ? std::abs(cell.mean - cell.exact) / cell.stderr_
                         : (cell.mean == cell.exact ? 0.0
                                                    : std::numeric_limits<double>::infinity());
            cells.push_back(cell);
          }
    }
  }
  return cells;
}

}  // namespace chord
