#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "manifolds/manifolds.hpp"
#include "support/properties.hpp"

namespace manifolds {
namespace {

constexpr double kPi = std::numbers::pi;
using Spd3 = SymmetricPositiveDefinite<3>;
using So3 = Rotations<3>;

// Axis-angle rotation written out entry by entry (independent of Rodrigues in
// matrix form).
Eigen::Matrix3d axis_angle(const Eigen::Vector3d& axis, double theta) {
  const Eigen::Vector3d u = axis.normalized();
  const double c = std::cos(theta), s = std::sin(theta), t = 1.0 - c;
  Eigen::Matrix3d r;
  r << t * u.x() * u.x() + c, t * u.x() * u.y() - s * u.z(), t * u.x() * u.z() + s * u.y(),
      t * u.x() * u.y() + s * u.z(), t * u.y() * u.y() + c, t * u.y() * u.z() - s * u.x(),
      t * u.x() * u.z() - s * u.y(), t * u.y() * u.z() + s * u.x(), t * u.z() * u.z() + c;
  return r;
}

Eigen::Matrix3d skew_z(double theta) {
  Eigen::Matrix3d w = Eigen::Matrix3d::Zero();
  w(0, 1) = -theta;
  w(1, 0) = theta;
  return w;
}

// Oracle matrix functions through a plain eigendecomposition.
Eigen::MatrixXd spectral(const Eigen::MatrixXd& a, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return es.eigenvectors() * es.eigenvalues().unaryExpr(f).asDiagonal() * es.eigenvectors().transpose();
}

// ---------------------------------------------------------------------------
// SPD

TEST(Spd, Examples) {
  const Spd3 spd;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  EXPECT_NEAR(distance(spd, I, Eigen::Matrix3d(std::exp(1.0) * I)), std::sqrt(3.0), 1e-12);
  EXPECT_EQ(exp(spd, I, Eigen::Matrix3d::Zero().eval()), I);
  EXPECT_NEAR(inner(spd, I, I, I), 3.0, 1e-15);
  EXPECT_NEAR(distance(spd, I, Eigen::Matrix3d(Eigen::Vector3d(std::exp(1.0), 1, 1).asDiagonal())), 1.0, 1e-12);
}

TEST(Spd, ClosedFormsAgainstEigendecompositionOracle) {
  const Spd3 spd;
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Matrix3d p = spd.random_point(rng);
    const Eigen::Matrix3d q = spd.random_point(rng);
    const Eigen::Matrix3d X = spd.random_tangent(p, rng);
    const Eigen::MatrixXd s = spectral(p, [](double l) { return std::sqrt(l); });
    const Eigen::MatrixXd si = s.inverse();
    const Eigen::MatrixXd exp_oracle = s * spectral(si * X * si, [](double l) { return std::exp(l); }) * s;
    EXPECT_LT((exp(spd, p, X) - exp_oracle).norm(), 1e-10 * exp_oracle.norm());
    const Eigen::MatrixXd log_oracle = s * spectral(si * q * si, [](double l) { return std::log(l); }) * s;
    EXPECT_LT((log(spd, p, q) - log_oracle).norm(), 1e-10 * std::max(1.0, log_oracle.norm()));
    const Eigen::MatrixXd pinv = p.inverse();
    EXPECT_NEAR(inner(spd, p, X, X), (pinv * X * pinv * X).trace(), 1e-10 * std::abs((pinv * X * pinv * X).trace()));
  }
}

TEST(Spd, ExpSymmetricPositive) {
  const Spd3 spd;
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1000; ++i) {
    const auto p = spd.random_point(rng);
    const auto q = exp(spd, p, spd.random_tangent(p, rng));
    EXPECT_LE((q - q.transpose()).norm(), 1e-12 * std::max(1.0, q.norm()));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(q);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
}

TEST(Spd, MatrixExpLogInverseOverWideSpectrum) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> log_eig(std::log(1e-6), std::log(1e6));
  for (int i = 0; i < 200; ++i) {
    const Eigen::Matrix3d v = Rotations<3>().random_point(rng);
    const Eigen::Vector3d eig(std::exp(log_eig(rng)), std::exp(log_eig(rng)), std::exp(log_eig(rng)));
    const Eigen::Matrix3d a = v * eig.asDiagonal() * v.transpose();
    const Eigen::Matrix3d back = matfun::sym_exp(matfun::sym_log(a));
    EXPECT_LT((back - a).norm() / a.norm(), 1e-9);
  }
}

TEST(Spd, AffineInvariance) {
  const Spd3 spd;
  std::mt19937_64 rng(53);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 200; ++i) {
    const auto p = spd.random_point(rng);
    const auto q = spd.random_point(rng);
    Eigen::Matrix3d a;
    for (int k = 0; k < 9; ++k) a(k) = normal(rng);
    if (std::abs(a.determinant()) < 0.1) continue;
    EXPECT_NEAR(distance(spd, Eigen::Matrix3d(a * p * a.transpose()), Eigen::Matrix3d(a * q * a.transpose())),
                distance(spd, p, q), 1e-9);
  }
}

TEST(Spd, SingularAndProjection) {
  const Spd3 spd;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d singular = Eigen::Vector3d(1, 1, 1e-14).asDiagonal();
  EXPECT_THROW(log(spd, I, singular), GeometryError);
  const Eigen::Matrix3d indefinite = Eigen::Vector3d(2, 1, -1).asDiagonal();
  const Eigen::Matrix3d projected = project_point(spd, indefinite);
  EXPECT_TRUE(spd.is_point(projected, kDefaultTolerance));
  EXPECT_NEAR(projected(0, 0), 2.0, 1e-15);
}

TEST(Spd, Properties) {
  testing::check_manifold_properties(Spd3(), 400);
  testing::check_manifold_properties(SymmetricPositiveDefinite<>(2), 401);
}

// ---------------------------------------------------------------------------
// Rotations

TEST(Rotations, Examples) {
  const So3 r;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d expected;
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  EXPECT_LT((exp(r, I, skew_z(kPi / 2)) - expected).norm(), 1e-12);
  EXPECT_LT((exp(r, I, skew_z(kPi / 2)) - axis_angle(Eigen::Vector3d::UnitZ(), kPi / 2)).norm(), 1e-12);
  EXPECT_NEAR(distance(r, I, expected), kPi / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(log(r, I, I), Eigen::Matrix3d::Zero());
}

TEST(Rotations, DistanceIsSqrtTwoTimesAngle) {
  const So3 r;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> angle(0.0, kPi - 1e-3);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Vector3d axis = Eigen::Vector3d::Random();
    const double theta = angle(rng);
    const Eigen::Matrix3d R = axis_angle(axis, theta);
    EXPECT_NEAR(distance(r, I, R), std::sqrt(2.0) * theta, 1e-12);
    EXPECT_NEAR(distance(Rotations<>(3), Eigen::Matrix3d(I), Eigen::Matrix3d(R)), std::sqrt(2.0) * theta, 1e-9);
  }
}

TEST(Rotations, RodriguesAgreesWithEigenPath) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Vector3d w(normal(rng), normal(rng), normal(rng));
    const Eigen::Matrix3d W = matfun::hat(w);
    const Eigen::Matrix3d rod = matfun::rodrigues_exp(W);
    const Eigen::Matrix3d eig = matfun::skew_exp_eigen(W);
    EXPECT_LT((rod - eig).norm(), 1e-10);
    if (w.norm() < kPi - 1e-3) {
      EXPECT_LT((matfun::rotation_log_eigen(rod, 1e-6) - W).norm(), 1e-9);
    }
  }
}

TEST(Rotations, ExpIsOrthogonal) {
  const So3 r;
  const Rotations<> r4(4);
  std::mt19937_64 rng(67);
  for (int i = 0; i < 1000; ++i) {
    const auto p = r.random_point(rng);
    const auto q = exp(r, p, Eigen::Matrix3d(3.0 * r.random_tangent(p, rng)));
    EXPECT_LT((q.transpose() * q - Eigen::Matrix3d::Identity()).norm(), 1e-10);
    EXPECT_NEAR(q.determinant(), 1.0, 1e-10);
    const Eigen::MatrixXd p4 = r4.random_point(rng);
    const Eigen::MatrixXd q4 = exp(r4, p4, r4.random_tangent(p4, rng));
    EXPECT_LT((q4.transpose() * q4 - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-10);
    EXPECT_NEAR(q4.determinant(), 1.0, 1e-10);
  }
}

TEST(Rotations, LogUndefinedNearPi) {
  const So3 r;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d half_turn = axis_angle(Eigen::Vector3d(1, 2, 3), kPi);
  try {
    log(r, I, half_turn);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryErrorKind::LogUndefined);
  }
  EXPECT_NEAR(distance(r, I, half_turn), std::sqrt(2.0) * kPi, 1e-7);
  EXPECT_NO_THROW(log(r, I, axis_angle(Eigen::Vector3d(1, 2, 3), kPi - 1e-4)));
}

TEST(Rotations, PolarRetractionRoundtripAndProjection) {
  const So3 r;
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const auto p = r.random_point(rng);
    const Eigen::Matrix3d X = r.random_tangent(p, rng);
    const auto q = retract(r, p, X, RetractionMethod::Projection);
    EXPECT_TRUE(r.is_point(q, 1e-10));
    EXPECT_LT((inverse_retract(r, p, q, InverseRetractionMethod::Projection) - X).norm(), 1e-9 * std::max(1.0, X.norm()));
  }
  Eigen::Matrix3d perturbed = Eigen::Matrix3d::Identity();
  perturbed(0, 1) = 0.05;
  perturbed(2, 0) = -0.02;
  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(perturbed, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d oracle = svd.matrixU() * svd.matrixV().transpose();
  EXPECT_LT((project_point(r, perturbed) - oracle).norm(), 1e-14);
}

TEST(Rotations, Properties) {
  testing::check_manifold_properties(So3(), 500);
  testing::check_manifold_properties(Rotations<>(3), 501);
  testing::check_manifold_properties(Rotations<>(4), 502);
  testing::check_manifold_properties(Rotations<2>(), 503);
}

}  // namespace
}  // namespace manifolds
