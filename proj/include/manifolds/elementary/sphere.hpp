#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "manifolds/core/manifold.hpp"
#include "manifolds/core/numeric.hpp"

namespace manifolds {

/// Unit sphere S^n embedded in R^{n+1} with the restricted Euclidean metric.
/// The template argument is the intrinsic dimension n.
template <int N = Eigen::Dynamic>
class Sphere {
 public:
  static constexpr int kAmbient = N == Eigen::Dynamic ? Eigen::Dynamic : N + 1;

  using Point = Eigen::Matrix<double, kAmbient, 1>;
  using Tangent = Point;
  using PointRef = Eigen::Ref<Point>;
  using ConstPointRef = const Eigen::Ref<const Point>&;

  /// Points within this angle of antipodal have no unique shortest geodesic.
  static constexpr double kAntipodalMargin = 1e-8;

  Sphere()
    requires(N != Eigen::Dynamic)
      : n_(N) {}

  explicit Sphere(Index n) : n_(n) {
    if (n < 1 || (N != Eigen::Dynamic && n != N))
      throw GeometryError(GeometryErrorKind::InvalidArgument, "Sphere dimension mismatch");
  }

  ManifoldDescriptor descriptor() const {
    return ManifoldDescriptor(ManifoldKind::Sphere, {n_}, MetricTag::Euclidean);
  }
  Index manifold_dimension() const { return n_; }
  EmbeddingInfo embedding() const { return {{n_ + 1}, true}; }
  double injectivity_radius() const { return std::numbers::pi; }

  Point allocate_point() const { return Point::Zero(n_ + 1); }
  Tangent allocate_tangent() const { return Tangent::Zero(n_ + 1); }

  bool is_point(ConstPointRef p, double tol) const {
    return p.size() == n_ + 1 && p.allFinite() && std::abs(p.norm() - 1.0) <= tol;
  }
  bool is_tangent(ConstPointRef p, ConstPointRef X, double tol) const {
    return X.size() == n_ + 1 && X.allFinite() && std::abs(p.dot(X)) <= tol;
  }

  /// cos(|X|) p + sin(|X|) X / |X|
  void exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
    const double theta = X.norm();
    const double c = std::cos(theta);
    const double s = numeric::sinc(theta);
    q = c * p + s * X;
  }

  void log_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    const double theta = distance(p, q);
    if (theta > std::numbers::pi - kAntipodalMargin)
      throw GeometryError(GeometryErrorKind::LogUndefined,
                          "antipodal points are joined by infinitely many geodesics");
    const double cos_theta = p.dot(q);
    const double f = numeric::x_over_sin(theta);
    X = f * (q - cos_theta * p);
  }

  /// Great-arc length. Evaluated as 2 atan2(|p - q|, |p + q|), which equals
  /// arccos(<p, q>) but keeps full relative accuracy near 0 and pi.
  double distance(ConstPointRef p, ConstPointRef q) const {
    return 2.0 * std::atan2((p - q).norm(), (p + q).norm());
  }

  double inner(ConstPointRef, ConstPointRef X, ConstPointRef Y) const { return X.dot(Y); }

  /// Rotation in span{p, q}; the orthogonal complement is fixed.
  void parallel_transport_to(PointRef Y, ConstPointRef p, ConstPointRef q, ConstPointRef X) const {
    if (distance(p, q) > std::numbers::pi - kAntipodalMargin)
      throw GeometryError(GeometryErrorKind::TransportUndefined,
                          "no unique geodesic between antipodal points");
    const double f = q.dot(X) / (1.0 + p.dot(q));
    Y = X - f * (p + q);
  }

  /// (p + X) / |p + X|
  void projection_retract_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
    const double r = (p + X).norm();
    q = (p + X) / r;
  }

  /// Inverse of the projection retraction: X = q / <p, q> - p, defined on the
  /// open hemisphere around p.
  void projection_inverse_retract_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    const double c = p.dot(q);
    if (c <= 0.0)
      throw GeometryError(GeometryErrorKind::InverseRetractionUndefined,
                          "q is not in the open hemisphere centred at p");
    X = q / c - p;
  }

  void project_point_to(PointRef q, ConstPointRef a) const {
    const double r = a.norm();
    if (!(r > 0.0) || !std::isfinite(r))
      throw GeometryError(GeometryErrorKind::ProjectionUndefined, "cannot normalize the zero vector");
    q = a / r;
  }

  void project_tangent_to(PointRef Y, ConstPointRef p, ConstPointRef a) const {
    const double c = p.dot(a);
    Y = a - c * p;
  }

  /// Gram-Schmidt of the canonical ambient vectors against p, in index order,
  /// skipping the canonical vector most aligned with p.
  std::vector<Tangent> basis_vectors(ConstPointRef p) const {
    const Index ambient = n_ + 1;
    Index skip = 0;
    p.cwiseAbs().maxCoeff(&skip);
    std::vector<Tangent> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (Index i = 0; i < ambient; ++i) {
      if (i == skip) continue;
      Tangent v = allocate_tangent();
      v(i) = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        v -= p.dot(v) * p;
        for (const auto& b : out) v -= b.dot(v) * b;
      }
      v.normalize();
      out.push_back(v);
    }
    return out;
  }

  /// Normalized standard Gaussian ambient vector.
  template <class Rng>
  Point random_point(Rng& rng) const {
    for (;;) {
      Point a = gaussian(rng);
      const double r = a.norm();
      if (r > 1e-6) return a / r;
    }
  }

  template <class Rng>
  Tangent random_tangent(ConstPointRef p, Rng& rng) const {
    Tangent a = gaussian(rng);
    Tangent out = allocate_tangent();
    project_tangent_to(out, p, a);
    return out;
  }

 private:
  template <class Rng>
  Point gaussian(Rng& rng) const {
    std::normal_distribution<double> normal;
    Point a(n_ + 1);
    for (Index i = 0; i <= n_; ++i) a(i) = normal(rng);
    return a;
  }

  Index n_;
};

}  // namespace manifolds
