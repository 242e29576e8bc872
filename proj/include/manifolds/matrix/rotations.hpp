#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "manifolds/core/manifold.hpp"
#include "manifolds/matrix/matrix_functions.hpp"

namespace manifolds {

/// Special orthogonal group SO(n) as a Riemannian manifold. Tangent vectors at
/// p are stored as ambient matrices X = p W with W skew-symmetric; the metric
/// is the Frobenius inner product, so for n = 3 a rotation by angle theta lies
/// at distance sqrt(2) theta from the identity.
///
/// n = 3 uses the Rodrigues closed forms; other sizes use eigendecomposition
/// based matrix exp/log.
template <int N = Eigen::Dynamic>
class Rotations {
 public:
  using Point = Eigen::Matrix<double, N, N>;
  using Tangent = Point;
  using PointRef = Eigen::Ref<Point>;
  using ConstPointRef = const Eigen::Ref<const Point>&;

  /// log refuses rotation angles beyond pi - kLogAngleMargin.
  static constexpr double kLogAngleMargin = 1e-6;

  static constexpr bool kMaybeThree = N == 3 || N == Eigen::Dynamic;

  Rotations()
    requires(N != Eigen::Dynamic)
      : n_(N) {}

  explicit Rotations(Index n) : n_(n) {
    if (n < 2 || (N != Eigen::Dynamic && n != N))
      throw GeometryError(GeometryErrorKind::InvalidArgument, "Rotations size mismatch");
  }

  Index n() const { return n_; }

  ManifoldDescriptor descriptor() const {
    return ManifoldDescriptor(ManifoldKind::Rotations, {n_}, MetricTag::Euclidean);
  }
  Index manifold_dimension() const { return n_ * (n_ - 1) / 2; }
  EmbeddingInfo embedding() const { return {{n_, n_}, true}; }
  double injectivity_radius() const { return std::numbers::pi * std::numbers::sqrt2; }

  Point allocate_point() const { return Point::Zero(n_, n_); }
  Tangent allocate_tangent() const { return Tangent::Zero(n_, n_); }

  bool is_point(ConstPointRef p, double tol) const {
    if (!has_shape(p) || !p.allFinite()) return false;
    const Point gram = p.transpose() * p;
    return (gram - Point::Identity(n_, n_)).norm() <= tol && p.determinant() > 0.0;
  }

  bool is_tangent(ConstPointRef p, ConstPointRef X, double tol) const {
    if (!has_shape(X) || !X.allFinite()) return false;
    const Point w = p.transpose() * X;
    return (w + w.transpose()).norm() <= tol;
  }

  /// Matrix exponential of a skew matrix.
  Point skew_exp(const Point& w) const {
    if constexpr (kMaybeThree) {
      if (n_ == 3) return Point(matfun::rodrigues_exp(Eigen::Matrix3d(w)));
    }
    return matfun::skew_exp_eigen(w);
  }

  /// Principal logarithm of a rotation, skew-symmetric.
  Point rotation_log(const Point& r) const {
    if constexpr (kMaybeThree) {
      if (n_ == 3) return Point(matfun::rodrigues_log(Eigen::Matrix3d(r), kLogAngleMargin));
    }
    return matfun::rotation_log_eigen(r, kLogAngleMargin);
  }

  /// p mexp(p^T X)
  void exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
    const Point out = p * skew_exp(skew_part(p.transpose() * X));
    q = out;
  }

  /// p mlog(p^T q)
  void log_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    const Point out = p * rotation_log(p.transpose() * q);
    X = out;
  }

  /// |mlog(p^T q)|_F; defined at angle pi as well.
  double distance(ConstPointRef p, ConstPointRef q) const {
    const Point r = p.transpose() * q;
    if constexpr (kMaybeThree) {
      if (n_ == 3) return std::numbers::sqrt2 * matfun::rotation_angle(Eigen::Matrix3d(r));
    }
    return matfun::rotation_angles_eigen(r).norm();
  }

  double inner(ConstPointRef, ConstPointRef X, ConstPointRef Y) const {
    return X.cwiseProduct(Y).sum();
  }

  /// Along p exp(t W): PT(p A) = p exp(W/2) A exp(W/2), with A = p^T X.
  void parallel_transport_to(PointRef Y, ConstPointRef p, ConstPointRef q, ConstPointRef X) const {
    Point w;
    try {
      w = rotation_log(p.transpose() * q);
    } catch (const GeometryError& e) {
      if (e.kind() != GeometryErrorKind::LogUndefined) throw;
      throw GeometryError(GeometryErrorKind::TransportUndefined,
                          "no unique geodesic between rotations at angle pi");
    }
    const Point half = skew_exp(Point(0.5 * w));
    const Point a = skew_part(p.transpose() * X);
    const Point out = p * half * a * half;
    Y = out;
  }

  /// Nearest rotation to p + X (polar factor).
  void projection_retract_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
    const Point out = polar_rotation(p + X);
    q = out;
  }

  /// Inverse of the polar retraction: finds skew W with polar(I + W) = p^T q by
  /// solving R^T W + W R = R - R^T (R = p^T q) over the skew basis.
  void projection_inverse_retract_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    const Point r = p.transpose() * q;
    const Point rhs = r - r.transpose();
    const Index k = manifold_dimension();
    Eigen::MatrixXd system(n_ * n_, k);
    Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(rhs.data(), n_ * n_);
    Index col = 0;
    for (Index i = 0; i < n_; ++i)
      for (Index j = i + 1; j < n_; ++j, ++col) {
        Point e = Point::Zero(n_, n_);
        e(i, j) = -1.0;
        e(j, i) = 1.0;
        const Point image = r.transpose() * e + e * r;
        system.col(col) = Eigen::Map<const Eigen::VectorXd>(image.data(), n_ * n_);
      }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(system);
    if (qr.rank() < k)
      throw GeometryError(GeometryErrorKind::InverseRetractionUndefined,
                          "polar inverse retraction is singular at this pair");
    const Eigen::VectorXd c = qr.solve(b);
    Point w = Point::Zero(n_, n_);
    col = 0;
    for (Index i = 0; i < n_; ++i)
      for (Index j = i + 1; j < n_; ++j, ++col) {
        w(i, j) = -c(col);
        w(j, i) = c(col);
      }
    // I + W must have a positive definite symmetric polar factor.
    const Point sym = r.transpose() * (Point::Identity(n_, n_) + w);
    Eigen::SelfAdjointEigenSolver<Point> es(matfun::symmetrize(sym), Eigen::EigenvaluesOnly);
    if ((system * c - b).norm() > 1e-8 * std::max(1.0, b.norm()) || es.eigenvalues().minCoeff() <= 0.0)
      throw GeometryError(GeometryErrorKind::InverseRetractionUndefined,
                          "q is outside the image of the polar retraction at p");
    const Point out = p * w;
    X = out;
  }

  /// Nearest rotation in Frobenius norm (polar factor with determinant fix).
  void project_point_to(PointRef q, ConstPointRef a) const {
    if (!has_shape(a) || !a.allFinite())
      throw GeometryError(GeometryErrorKind::ProjectionUndefined, "ambient matrix has wrong shape");
    const Point out = polar_rotation(a);
    q = out;
  }

  /// p skew(p^T a)
  void project_tangent_to(PointRef Y, ConstPointRef p, ConstPointRef a) const {
    const Point out = p * skew_part(p.transpose() * a);
    Y = out;
  }

  /// p B_ij with B_ij = (e_j e_i^T - e_i e_j^T)/sqrt(2), i < j, row-major.
  std::vector<Tangent> basis_vectors(ConstPointRef p) const {
    std::vector<Tangent> out;
    out.reserve(static_cast<std::size_t>(manifold_dimension()));
    for (Index i = 0; i < n_; ++i)
      for (Index j = i + 1; j < n_; ++j) {
        Point b = Point::Zero(n_, n_);
        b(i, j) = -std::numbers::sqrt2 / 2.0;
        b(j, i) = std::numbers::sqrt2 / 2.0;
        out.push_back(Point(p * b));
      }
    return out;
  }

  /// Haar-uniform: QR of a Gaussian matrix with the sign of diag(R) fixed,
  /// first column negated when the determinant is -1.
  template <class Rng>
  Point random_point(Rng& rng) const {
    const Point g = gaussian(rng);
    const Eigen::HouseholderQR<Point> qr(g);
    Point q = qr.householderQ();
    const Point r = qr.matrixQR();
    for (Index i = 0; i < n_; ++i)
      if (r(i, i) < 0.0) q.col(i) *= -1.0;
    if (q.determinant() < 0.0) q.col(0) *= -1.0;
    return q;
  }

  template <class Rng>
  Tangent random_tangent(ConstPointRef p, Rng& rng) const {
    return Point(p * skew_part(gaussian(rng)));
  }

  static Point skew_part(const Point& a) { return 0.5 * (a - a.transpose()); }

 private:
  bool has_shape(ConstPointRef a) const { return a.rows() == n_ && a.cols() == n_; }

  Point polar_rotation(const Point& a) const {
    const Eigen::JacobiSVD<Point> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Point u = svd.matrixU();
    const Point v = svd.matrixV();
    if ((u * v.transpose()).determinant() < 0.0) u.col(n_ - 1) *= -1.0;
    return u * v.transpose();
  }

  template <class Rng>
  Point gaussian(Rng& rng) const {
    std::normal_distribution<double> normal;
    Point g(n_, n_);
    for (Index j = 0; j < n_; ++j)
      for (Index i = 0; i < n_; ++i) g(i, j) = normal(rng);
    return g;
  }

  Index n_;
};

}  // namespace manifolds
