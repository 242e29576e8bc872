#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "manifolds/core/manifold.hpp"

namespace manifolds::testing {

/// Norm cap for roundtrip samples on manifolds with infinite injectivity radius.
inline constexpr double kFiniteRadiusCap = 4.0;
/// Smallest sampled tangent norm; below about 1e-3 the relative roundtrip error
/// is limited by the absolute rounding of the points themselves.
inline constexpr double kMinSampleNorm = 0.01;

/// Upper bound for sampled tangent norms: half the injectivity radius.
template <Manifold M>
double roundtrip_norm_bound(const M& m) {
  const double r = m.injectivity_radius();
  return std::isfinite(r) ? 0.5 * r : 0.5 * kFiniteRadiusCap;
}

/// Random tangent at p with norm uniform in [kMinSampleNorm, bound).
template <Manifold M, class Rng>
TangentOf<M> random_tangent_with_norm_below(const M& m, const PointOf<M>& p, Rng& rng, double bound) {
  TangentOf<M> X = m.random_tangent(p, rng);
  const double n = norm(m, p, X);
  std::uniform_real_distribution<double> length(kMinSampleNorm, bound);
  scale_in_place(X, length(rng) / n);
  return X;
}

struct RoundtripStats {
  double max_log_relative_error = 0.0;
  double max_distance_error = 0.0;
  int samples = 0;
};

/// Samples (p, X) and measures |log_p exp_p X - X| / max(|X|, 1e-12) and
/// |d(p, exp_p X) - |X||, both with the manifold's own norm.
template <Manifold M>
RoundtripStats roundtrip_stats(const M& m, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double bound = roundtrip_norm_bound(m);
  RoundtripStats stats;
  for (int i = 0; i < samples; ++i) {
    const PointOf<M> p = m.random_point(rng);
    const TangentOf<M> X = random_tangent_with_norm_below(m, p, rng, bound);
    const PointOf<M> q = exp(m, p, X);
    TangentOf<M> diff = log(m, p, q);
    axpy(-1.0, X, diff);
    const double nx = norm(m, p, X);
    stats.max_log_relative_error =
        std::max(stats.max_log_relative_error, norm(m, p, diff) / std::max(nx, 1e-12));
    stats.max_distance_error = std::max(stats.max_distance_error, std::abs(m.distance(p, q) - nx));
    ++stats.samples;
  }
  return stats;
}

/// Random unit tangent at p.
template <Manifold M, class Rng>
TangentOf<M> random_unit_tangent(const M& m, const PointOf<M>& p, Rng& rng) {
  TangentOf<M> X = m.random_tangent(p, rng);
  scale_in_place(X, 1.0 / norm(m, p, X));
  return X;
}

/// Max |<PX, PY>_q - <X, Y>_p| over sampled p, q = exp_p(V) and unit X, Y.
template <Manifold M>
double transport_isometry_error(const M& m, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double bound = roundtrip_norm_bound(m);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const PointOf<M> p = m.random_point(rng);
    const PointOf<M> q = exp(m, p, random_tangent_with_norm_below(m, p, rng, bound));
    const TangentOf<M> X = random_unit_tangent(m, p, rng);
    const TangentOf<M> Y = random_unit_tangent(m, p, rng);
    const TangentOf<M> PX = parallel_transport(m, p, q, X);
    const TangentOf<M> PY = parallel_transport(m, p, q, Y);
    worst = std::max(worst, std::abs(m.inner(q, PX, PY) - m.inner(p, X, Y)));
  }
  return worst;
}

}  // namespace manifolds::testing
