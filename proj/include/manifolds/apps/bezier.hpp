#pragma once

#include <utility>
#include <vector>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Bezier curve of degree control_points.size() - 1 on a manifold.
template <Manifold M>
struct BezierSpec {
  M manifold;
  std::vector<PointOf<M>> control_points;
};

/// De Casteljau evaluation with geodesics gamma(t; p, q) = exp_p(t log_p q).
/// The first level is written into a scratch array of n points which is then
/// contracted in place. Degree 1 reduces to a single shortest_geodesic call.
/// LogUndefined from any level propagates.
template <Manifold M>
PointOf<M> bezier_eval(const BezierSpec<M>& spec, double t) {
  const auto& x = spec.control_points;
  if (x.size() < 2)
    throw GeometryError(GeometryErrorKind::InvalidArgument, "a Bezier curve needs two control points");
  if (!(t >= 0.0 && t <= 1.0))
    throw GeometryError(GeometryErrorKind::InvalidArgument, "Bezier parameter outside [0, 1]");
  const M& m = spec.manifold;
  const std::size_t n = x.size() - 1;
  std::vector<PointOf<M>> b(n, m.allocate_point());
  for (std::size_t i = 0; i < n; ++i) shortest_geodesic_to(m, b[i], x[i], x[i + 1], t);
  for (std::size_t level = n - 1; level > 0; --level)
    for (std::size_t i = 0; i < level; ++i) shortest_geodesic_to(m, b[i], b[i], b[i + 1], t);
  return std::move(b[0]);
}

}  // namespace manifolds
