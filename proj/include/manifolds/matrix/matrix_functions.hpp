#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "manifolds/core/errors.hpp"
#include "manifolds/core/numeric.hpp"

// Matrix functions used by the SPD and rotation manifolds. Symmetric functions
// go through a self-adjoint eigendecomposition; fixed-size 3x3 inputs stay on
// the stack.

namespace manifolds::matfun {

/// Eigenvalues below this are treated as numerically singular by sym_log.
inline constexpr double kLogEigenvalueFloor = 1e-12;

template <class Derived>
using PlainOf = typename Derived::PlainObject;

template <class Derived>
PlainOf<Derived> symmetrize(const Eigen::MatrixBase<Derived>& a) {
  return 0.5 * (a + a.transpose());
}

/// Self-adjoint eigendecomposition of the symmetric part of a.
template <class Derived>
Eigen::SelfAdjointEigenSolver<PlainOf<Derived>> sym_eigen(const Eigen::MatrixBase<Derived>& a) {
  Eigen::SelfAdjointEigenSolver<PlainOf<Derived>> es(symmetrize(a));
  if (es.info() != Eigen::Success)
    throw GeometryError(GeometryErrorKind::DecompositionFailed,
                        "symmetric eigendecomposition did not converge");
  return es;
}

/// V f(Lambda) V^T for the decomposition es.
template <class Solver, class F>
typename Solver::MatrixType apply_spectral(const Solver& es, F&& f) {
  using Vec = typename Solver::RealVectorType;
  Vec mapped = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
}

template <class Derived>
PlainOf<Derived> sym_exp(const Eigen::MatrixBase<Derived>& a) {
  return apply_spectral(sym_eigen(a), [](double l) { return std::exp(l); });
}

template <class Derived>
PlainOf<Derived> sym_log(const Eigen::MatrixBase<Derived>& a) {
  const auto es = sym_eigen(a);
  if (es.eigenvalues().minCoeff() < kLogEigenvalueFloor)
    throw GeometryError(GeometryErrorKind::DecompositionFailed,
                        "matrix logarithm of a numerically singular matrix");
  return apply_spectral(es, [](double l) { return std::log(l); });
}

template <class Derived>
PlainOf<Derived> sym_sqrt(const Eigen::MatrixBase<Derived>& a) {
  return apply_spectral(sym_eigen(a), [](double l) { return std::sqrt(l); });
}

/// Square root and inverse square root of an SPD matrix from one decomposition.
template <class Matrix>
struct SqrtPair {
  Matrix sqrt;
  Matrix inv_sqrt;
};

template <class Derived>
SqrtPair<PlainOf<Derived>> spd_sqrt_pair(const Eigen::MatrixBase<Derived>& p) {
  const auto es = sym_eigen(p);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw GeometryError(GeometryErrorKind::DecompositionFailed, "matrix is not positive definite");
  return {apply_spectral(es, [](double l) { return std::sqrt(l); }),
          apply_spectral(es, [](double l) { return 1.0 / std::sqrt(l); })};
}

// ---------------------------------------------------------------------------
// so(3) / SO(3)

inline Eigen::Matrix3d hat(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0.0, -w.z(), w.y(),  //
      w.z(), 0.0, -w.x(),   //
      -w.y(), w.x(), 0.0;
  return m;
}

/// Axial vector of the skew part of m.
inline Eigen::Vector3d vee(const Eigen::Matrix3d& m) {
  return 0.5 * Eigen::Vector3d(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
}

/// Rodrigues: exp(W) = I + sinc(t) W + (1 - cos t)/t^2 W^2 with t = |vee(W)|.
inline Eigen::Matrix3d rodrigues_exp(const Eigen::Matrix3d& skew) {
  const Eigen::Vector3d w = vee(skew);
  const double t = w.norm();
  const Eigen::Matrix3d W = hat(w);
  return Eigen::Matrix3d::Identity() + numeric::sinc(t) * W +
         numeric::one_minus_cos_over_sq(t) * (W * W);
}

/// Rotation angle in [0, pi] of an (approximately) orthogonal 3x3 matrix.
inline double rotation_angle(const Eigen::Matrix3d& r) {
  const double s = vee(r).norm();          // sin(theta)
  const double c = 0.5 * (r.trace() - 1.0);  // cos(theta)
  return std::atan2(s, c);
}

/// Principal logarithm of a rotation; LogUndefined within `margin` of angle pi.
inline Eigen::Matrix3d rodrigues_log(const Eigen::Matrix3d& r, double margin) {
  const double t = rotation_angle(r);
  if (t > std::numbers::pi - margin)
    throw GeometryError(GeometryErrorKind::LogUndefined,
                        "rotation angle too close to pi for a unique logarithm");
  return hat(numeric::x_over_sin(t) * vee(r));
}

// ---------------------------------------------------------------------------
// Generic n (eigendecomposition paths)

/// exp of a real skew-symmetric matrix via the Hermitian eigendecomposition of
/// i*W: W = U diag(-i mu) U^H, so exp(W) = Re(U diag(exp(-i mu)) U^H).
template <class Derived>
PlainOf<Derived> skew_exp_eigen(const Eigen::MatrixBase<Derived>& skew) {
  using Complex = std::complex<double>;
  const Eigen::MatrixXcd h = Complex(0.0, 1.0) * skew.template cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw GeometryError(GeometryErrorKind::DecompositionFailed, "Hermitian eigendecomposition failed");
  const Eigen::VectorXcd phase =
      es.eigenvalues().unaryExpr([](double mu) { return std::exp(Complex(0.0, -mu)); });
  const Eigen::MatrixXcd e =
      es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
  return e.real();
}

/// Principal rotation angles (arguments of the eigenvalues) of an orthogonal
/// matrix, via the complex Schur form (diagonal for normal matrices).
template <class Derived>
Eigen::VectorXd rotation_angles_eigen(const Eigen::MatrixBase<Derived>& r) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(r.template cast<std::complex<double>>());
  if (schur.info() != Eigen::Success)
    throw GeometryError(GeometryErrorKind::DecompositionFailed, "complex Schur failed");
  const Eigen::VectorXcd d = schur.matrixT().diagonal();
  return d.unaryExpr([](std::complex<double> z) { return std::arg(z); }).real();
}

/// Principal logarithm of an orthogonal matrix through its complex Schur form;
/// LogUndefined when an eigen-angle is within `margin` of pi.
template <class Derived>
PlainOf<Derived> rotation_log_eigen(const Eigen::MatrixBase<Derived>& r, double margin) {
  using Complex = std::complex<double>;
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(r.template cast<Complex>());
  if (schur.info() != Eigen::Success)
    throw GeometryError(GeometryErrorKind::DecompositionFailed, "complex Schur failed");
  const Eigen::VectorXcd d = schur.matrixT().diagonal();
  Eigen::VectorXcd logd(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const double angle = std::arg(d(i));
    if (std::abs(angle) > std::numbers::pi - margin)
      throw GeometryError(GeometryErrorKind::LogUndefined,
                          "rotation angle too close to pi for a unique logarithm");
    logd(i) = Complex(std::log(std::abs(d(i))), angle);
  }
  const Eigen::MatrixXcd u = schur.matrixU();
  const Eigen::MatrixXd l = (u * logd.asDiagonal() * u.adjoint()).real();
  return 0.5 * (l - l.transpose());
}

}  // namespace manifolds::matfun
