#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Flat space R^{n x m} with the Frobenius inner product. Sizes are
/// compile-time when both template arguments are fixed.
template <int Rows = Eigen::Dynamic, int Cols = 1>
class Euclidean {
 public:
  using Point = Eigen::Matrix<double, Rows, Cols>;
  using Tangent = Point;
  using PointRef = Eigen::Ref<Point>;
  using ConstPointRef = const Eigen::Ref<const Point>&;

  Euclidean()
    requires(Rows != Eigen::Dynamic && Cols != Eigen::Dynamic)
      : rows_(Rows), cols_(Cols) {}

  explicit Euclidean(Index rows, Index cols = 1) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1 || (Rows != Eigen::Dynamic && rows != Rows) ||
        (Cols != Eigen::Dynamic && cols != Cols))
      throw GeometryError(GeometryErrorKind::InvalidArgument, "Euclidean shape mismatch");
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  ManifoldDescriptor descriptor() const {
    std::vector<Index> shape = cols_ == 1 ? std::vector<Index>{rows_} : std::vector<Index>{rows_, cols_};
    return ManifoldDescriptor(ManifoldKind::Euclidean, shape, MetricTag::Euclidean);
  }
  Index manifold_dimension() const { return rows_ * cols_; }
  EmbeddingInfo embedding() const { return {{rows_, cols_}, true}; }
  double injectivity_radius() const { return std::numeric_limits<double>::infinity(); }

  Point allocate_point() const { return Point::Zero(rows_, cols_); }
  Tangent allocate_tangent() const { return Tangent::Zero(rows_, cols_); }

  bool is_point(ConstPointRef p, double /*tol*/) const { return has_shape(p) && p.allFinite(); }
  bool is_tangent(ConstPointRef p, ConstPointRef X, double tol) const {
    return is_point(p, tol) && has_shape(X) && X.allFinite();
  }

  void exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const { q = p + X; }
  void log_to(PointRef X, ConstPointRef p, ConstPointRef q) const { X = q - p; }
  double distance(ConstPointRef p, ConstPointRef q) const { return (q - p).norm(); }
  double inner(ConstPointRef, ConstPointRef X, ConstPointRef Y) const {
    return X.cwiseProduct(Y).sum();
  }
  void parallel_transport_to(PointRef Y, ConstPointRef, ConstPointRef, ConstPointRef X) const {
    Y = X;
  }

  void projection_retract_to(PointRef q, ConstPointRef p, ConstPointRef X) const { q = p + X; }
  void projection_inverse_retract_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    X = q - p;
  }

  void project_point_to(PointRef q, ConstPointRef a) const { q = a; }
  void project_tangent_to(PointRef Y, ConstPointRef, ConstPointRef a) const { Y = a; }

  /// Canonical unit arrays in column-major order.
  std::vector<Tangent> basis_vectors(ConstPointRef) const {
    std::vector<Tangent> out;
    out.reserve(static_cast<std::size_t>(manifold_dimension()));
    for (Index k = 0; k < manifold_dimension(); ++k) {
      Tangent e = allocate_tangent();
      e(k % rows_, k / rows_) = 1.0;
      out.push_back(e);
    }
    return out;
  }

  template <class Rng>
  Point random_point(Rng& rng) const {
    return gaussian(rng);
  }
  template <class Rng>
  Tangent random_tangent(ConstPointRef, Rng& rng) const {
    return gaussian(rng);
  }

 private:
  bool has_shape(ConstPointRef a) const { return a.rows() == rows_ && a.cols() == cols_; }

  template <class Rng>
  Point gaussian(Rng& rng) const {
    std::normal_distribution<double> normal;
    Point out(rows_, cols_);
    for (Index j = 0; j < cols_; ++j)
      for (Index i = 0; i < rows_; ++i) out(i, j) = normal(rng);
    return out;
  }

  Index rows_;
  Index cols_;
};

}  // namespace manifolds
