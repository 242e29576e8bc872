#pragma once

#include <utility>
#include <vector>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Pairs a manifold with an explicit metric tag. Only the family's default
/// metric is implemented, so construction with any other tag fails with
/// MethodUnsupported; all operations forward to the wrapped manifold.
template <Manifold M>
class MetricManifold {
 public:
  using Point = typename M::Point;
  using Tangent = typename M::Tangent;

  MetricManifold(M inner, MetricTag metric) : inner_(std::move(inner)), metric_(metric) {
    if (metric != inner_.descriptor().metric())
      throw GeometryError(GeometryErrorKind::MethodUnsupported,
                          "metric not implemented for " + to_string(inner_.descriptor()));
  }

  const M& inner_manifold() const { return inner_; }
  MetricTag metric() const { return metric_; }

  ManifoldDescriptor descriptor() const { return inner_.descriptor(); }
  Index manifold_dimension() const { return inner_.manifold_dimension(); }
  EmbeddingInfo embedding() const { return inner_.embedding(); }
  double injectivity_radius() const { return inner_.injectivity_radius(); }
  Point allocate_point() const { return inner_.allocate_point(); }
  Tangent allocate_tangent() const { return inner_.allocate_tangent(); }

  bool is_point(const Point& p, double tol) const { return inner_.is_point(p, tol); }
  bool is_tangent(const Point& p, const Tangent& X, double tol) const {
    return inner_.is_tangent(p, X, tol);
  }
  void exp_to(Point& q, const Point& p, const Tangent& X) const { inner_.exp_to(q, p, X); }
  void log_to(Tangent& X, const Point& p, const Point& q) const { inner_.log_to(X, p, q); }
  double distance(const Point& p, const Point& q) const { return inner_.distance(p, q); }
  double inner(const Point& p, const Tangent& X, const Tangent& Y) const {
    return inner_.inner(p, X, Y);
  }
  void parallel_transport_to(Tangent& Y, const Point& p, const Point& q, const Tangent& X) const {
    inner_.parallel_transport_to(Y, p, q, X);
  }
  void projection_retract_to(Point& q, const Point& p, const Tangent& X) const
    requires HasProjectionRetraction<M>
  {
    inner_.projection_retract_to(q, p, X);
  }
  void projection_inverse_retract_to(Tangent& X, const Point& p, const Point& q) const
    requires HasProjectionRetraction<M>
  {
    inner_.projection_inverse_retract_to(X, p, q);
  }
  void project_point_to(Point& q, const Point& a) const { inner_.project_point_to(q, a); }
  void project_tangent_to(Tangent& Y, const Point& p, const Tangent& a) const {
    inner_.project_tangent_to(Y, p, a);
  }
  std::vector<Tangent> basis_vectors(const Point& p) const { return inner_.basis_vectors(p); }

  template <class Rng>
  Point random_point(Rng& rng) const {
    return inner_.random_point(rng);
  }
  template <class Rng>
  Tangent random_tangent(const Point& p, Rng& rng) const {
    return inner_.random_tangent(p, rng);
  }

 private:
  M inner_;
  MetricTag metric_;
};

}  // namespace manifolds
