#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "manifolds/core/manifold.hpp"
#include "manifolds/matrix/matrix_functions.hpp"

namespace manifolds {

/// Symmetric positive definite n x n matrices with the linear affine metric
/// <X, Y>_p = tr(p^-1 X p^-1 Y). Tangent vectors are symmetric matrices.
///
/// Inputs are symmetrized before any eigendecomposition, so asymmetry from
/// floating-point drift is repaired silently; ValidationManifold rejects
/// asymmetry above its tolerance.
template <int N = Eigen::Dynamic>
class SymmetricPositiveDefinite {
 public:
  using Point = Eigen::Matrix<double, N, N>;
  using Tangent = Point;
  using PointRef = Eigen::Ref<Point>;
  using ConstPointRef = const Eigen::Ref<const Point>&;

  /// Eigenvalue floor applied by project_point (10x the default tolerance so
  /// projected points pass is_point).
  static constexpr double kProjectionEigenvalueFloor = 10.0 * kDefaultTolerance;

  SymmetricPositiveDefinite()
    requires(N != Eigen::Dynamic)
      : n_(N) {}

  explicit SymmetricPositiveDefinite(Index n) : n_(n) {
    if (n < 1 || (N != Eigen::Dynamic && n != N))
      throw GeometryError(GeometryErrorKind::InvalidArgument, "SPD size mismatch");
  }

  Index n() const { return n_; }

  ManifoldDescriptor descriptor() const {
    return ManifoldDescriptor(ManifoldKind::SymmetricPositiveDefinite, {n_}, MetricTag::LinearAffine);
  }
  Index manifold_dimension() const { return n_ * (n_ + 1) / 2; }
  EmbeddingInfo embedding() const { return {{n_, n_}, false}; }
  double injectivity_radius() const { return std::numeric_limits<double>::infinity(); }

  Point allocate_point() const { return Point::Zero(n_, n_); }
  Tangent allocate_tangent() const { return Tangent::Zero(n_, n_); }

  bool is_point(ConstPointRef p, double tol) const {
    if (!has_shape(p) || !p.allFinite()) return false;
    if ((p - p.transpose()).norm() > tol) return false;
    Eigen::SelfAdjointEigenSolver<Point> es(matfun::symmetrize(p), Eigen::EigenvaluesOnly);
    return es.info() == Eigen::Success && es.eigenvalues().minCoeff() > tol;
  }

  bool is_tangent(ConstPointRef, ConstPointRef X, double tol) const {
    return has_shape(X) && X.allFinite() && (X - X.transpose()).norm() <= tol;
  }

  /// s mexp(s^-1 X s^-1) s with s = p^(1/2).
  void exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
    const auto [s, s_inv] = matfun::spd_sqrt_pair(p);
    const Point inner_arg = s_inv * matfun::symmetrize(X) * s_inv;
    const Point out = s * matfun::sym_exp(inner_arg) * s;
    q = matfun::symmetrize(out);
  }

  /// s mlog(s^-1 q s^-1) s with s = p^(1/2).
  void log_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    const auto [s, s_inv] = matfun::spd_sqrt_pair(p);
    const Point inner_arg = s_inv * matfun::symmetrize(q) * s_inv;
    const Point out = s * matfun::sym_log(inner_arg) * s;
    X = matfun::symmetrize(out);
  }

  /// |mlog(s^-1 q s^-1)|_F, from the eigenvalues of s^-1 q s^-1.
  double distance(ConstPointRef p, ConstPointRef q) const {
    const auto [s, s_inv] = matfun::spd_sqrt_pair(p);
    const Point inner_arg = s_inv * matfun::symmetrize(q) * s_inv;
    Eigen::SelfAdjointEigenSolver<Point> es(matfun::symmetrize(inner_arg), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw GeometryError(GeometryErrorKind::DecompositionFailed, "eigendecomposition failed");
    return es.eigenvalues().array().log().matrix().norm();
  }

  double inner(ConstPointRef p, ConstPointRef X, ConstPointRef Y) const {
    Eigen::LLT<Point> llt(matfun::symmetrize(p));
    if (llt.info() != Eigen::Success)
      throw GeometryError(GeometryErrorKind::DecompositionFailed, "Cholesky of a non-SPD point");
    const Point a = llt.solve(Point(X));
    const Point b = llt.solve(Point(Y));
    return a.transpose().cwiseProduct(b).sum();
  }

  /// E X E^T with E = (q p^-1)^(1/2) = s (s^-1 q s^-1)^(1/2) s^-1.
  void parallel_transport_to(PointRef Y, ConstPointRef p, ConstPointRef q, ConstPointRef X) const {
    const auto [s, s_inv] = matfun::spd_sqrt_pair(p);
    const Point mid = matfun::sym_sqrt(s_inv * matfun::symmetrize(q) * s_inv);
    const Point e = s * mid * s_inv;
    const Point out = e * matfun::symmetrize(X) * e.transpose();
    Y = matfun::symmetrize(out);
  }

  /// Symmetrize, then clamp eigenvalues from below.
  void project_point_to(PointRef q, ConstPointRef a) const {
    if (!has_shape(a) || !a.allFinite())
      throw GeometryError(GeometryErrorKind::ProjectionUndefined, "ambient matrix has wrong shape");
    const auto es = matfun::sym_eigen(a);
    q = matfun::apply_spectral(
        es, [](double l) { return std::max(l, kProjectionEigenvalueFloor); });
  }

  void project_tangent_to(PointRef Y, ConstPointRef, ConstPointRef a) const {
    const Point out = matfun::symmetrize(a);
    Y = out;
  }

  /// s E_ij s over the Frobenius-orthonormal symmetric basis E_ii = e_i e_i^T,
  /// E_ij = (e_i e_j^T + e_j e_i^T)/sqrt(2), i < j, in row-major (i, j) order.
  std::vector<Tangent> basis_vectors(ConstPointRef p) const {
    const auto [s, s_inv] = matfun::spd_sqrt_pair(p);
    std::vector<Tangent> out;
    out.reserve(static_cast<std::size_t>(manifold_dimension()));
    for (Index i = 0; i < n_; ++i) {
      for (Index j = i; j < n_; ++j) {
        Point e = allocate_tangent();
        if (i == j) {
          e(i, i) = 1.0;
        } else {
          e(i, j) = e(j, i) = std::numbers::sqrt2 / 2.0;
        }
        out.push_back(matfun::symmetrize(Point(s * e * s)));
      }
    }
    return out;
  }

  /// mexp(0.5 S) for a Gaussian symmetric S.
  template <class Rng>
  Point random_point(Rng& rng) const {
    return matfun::sym_exp(Point(0.5 * gaussian_symmetric(rng)));
  }

  /// s S s for a Gaussian symmetric S, so the metric norm is |S|_F.
  template <class Rng>
  Tangent random_tangent(ConstPointRef p, Rng& rng) const {
    const auto [s, s_inv] = matfun::spd_sqrt_pair(p);
    return matfun::symmetrize(Point(s * gaussian_symmetric(rng) * s));
  }

 private:
  bool has_shape(ConstPointRef a) const { return a.rows() == n_ && a.cols() == n_; }

  template <class Rng>
  Point gaussian_symmetric(Rng& rng) const {
    std::normal_distribution<double> normal;
    Point g(n_, n_);
    for (Index j = 0; j < n_; ++j)
      for (Index i = 0; i < n_; ++i) g(i, j) = normal(rng);
    return matfun::symmetrize(g);
  }

  Index n_;
};

}  // namespace manifolds
