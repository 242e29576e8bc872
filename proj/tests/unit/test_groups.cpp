#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "manifolds/manifolds.hpp"

namespace manifolds {
namespace {

constexpr double kPi = std::numbers::pi;
using AddGroup = GroupManifold<Euclidean<3>>;
using RotGroup = GroupManifold<Rotations<3>>;

AddGroup add_group() { return AddGroup(Euclidean<3>(), GroupOperation::Addition); }
RotGroup rot_group() { return RotGroup(Rotations<3>(), GroupOperation::Multiplication); }

Eigen::Matrix3d skew_z(double theta) {
  Eigen::Matrix3d w = Eigen::Matrix3d::Zero();
  w(0, 1) = -theta;
  w(1, 0) = theta;
  return w;
}

TEST(Group, OnlyInScopePairingsConstruct) {
  EXPECT_THROW(AddGroup(Euclidean<3>(), GroupOperation::Multiplication), GeometryError);
  EXPECT_THROW(RotGroup(Rotations<3>(), GroupOperation::Addition), GeometryError);
  static_assert(!GroupBase<Sphere<2>>);
  static_assert(!GroupBase<SymmetricPositiveDefinite<3>>);
  static_assert(GroupBase<Rotations<>>);
  EXPECT_EQ(add_group().operation(), GroupOperation::Addition);
  EXPECT_EQ(rot_group().operation(), GroupOperation::Multiplication);
}

TEST(Group, AdditionExamples) {
  const AddGroup g = add_group();
  EXPECT_EQ(g.identity_element(), Eigen::Vector3d::Zero());
  EXPECT_EQ(g.compose(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(1, 0, 0)), Eigen::Vector3d(2, 2, 3));
  EXPECT_EQ(g.inverse(Eigen::Vector3d(1, 2, 3)), Eigen::Vector3d(-1, -2, -3));
  const Eigen::Vector3d a(0.5, -1, 2), p(3, 1, 4);
  EXPECT_EQ(g.translate(a, p, Side::Left), a + p);
  EXPECT_EQ(g.translate(a, p, Side::Right), a + p);
  EXPECT_EQ(g.inverse_translate(a, g.translate(a, p)), p);
  EXPECT_EQ(g.group_exp(a), a);
  EXPECT_EQ(g.group_log(g.group_exp(a)), a);
  EXPECT_TRUE(bit_equal(g.group_exp(Eigen::Vector3d::Zero().eval()), g.identity_element()));
  const Eigen::Vector3d e = g.identity_element();
  EXPECT_EQ(g.compose(e, e), e);
}

TEST(Group, RotationExamples) {
  const RotGroup g = rot_group();
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  EXPECT_EQ(g.identity_element(), I);
  EXPECT_EQ(g.compose(g.identity_element(), g.identity_element()), I);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Matrix3d R = g.random_point(rng);
    EXPECT_LT((g.compose(g.inverse(R), R) - I).norm(), 1e-12);
    EXPECT_LT((g.compose(R, g.inverse(R)) - g.identity_element()).norm(), 1e-12);
    EXPECT_EQ(g.compose(g.identity_element(), R), R);
    EXPECT_EQ(g.compose(R, g.identity_element()), R);
    const Eigen::Matrix3d P = g.random_point(rng);
    for (Side side : {Side::Left, Side::Right})
      EXPECT_LT((g.inverse_translate(R, g.translate(R, P, side), side) - P).norm(), 1e-12);
  }
  EXPECT_LT((g.group_exp(Eigen::Matrix3d::Zero().eval()) - I).norm(), 1e-12);
}

TEST(Group, LeftAndRightDifferForNonCommutingRotations) {
  const RotGroup g = rot_group();
  const Eigen::Matrix3d a = g.group_exp(skew_z(0.7));
  Eigen::Matrix3d wx = Eigen::Matrix3d::Zero();
  wx(1, 2) = -0.4;
  wx(2, 1) = 0.4;
  const Eigen::Matrix3d b = g.group_exp(wx);
  EXPECT_GT((g.translate(a, b, Side::Left) - g.translate(a, b, Side::Right)).norm(), 1e-2);
  EXPECT_LT((g.translate(a, b, Side::Left) - a * b).norm(), 1e-15);
  EXPECT_LT((g.translate(a, b, Side::Right) - b * a).norm(), 1e-15);
}

TEST(Group, Associativity) {
  const RotGroup g = rot_group();
  const AddGroup h = add_group();
  std::mt19937_64 rng(3);
  double worst_rot = 0.0, worst_add = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = g.random_point(rng), q = g.random_point(rng), r = g.random_point(rng);
    worst_rot = std::max(worst_rot, (g.compose(g.compose(p, q), r) - g.compose(p, g.compose(q, r))).norm());
    const auto a = h.random_point(rng), b = h.random_point(rng), c = h.random_point(rng);
    worst_add = std::max(worst_add, (h.compose(h.compose(a, b), c) - h.compose(a, h.compose(b, c))).norm());
  }
  EXPECT_LT(worst_rot, 1e-10);
  EXPECT_LT(worst_add, 1e-10);
}

TEST(Group, RotationGroupExpMatchesRiemannianExpAtIdentity) {
  const RotGroup g = rot_group();
  const Rotations<3> r;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  EXPECT_LT((g.group_exp(skew_z(kPi / 2)) - exp(r, I, skew_z(kPi / 2))).norm(), 1e-12);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Matrix3d X = r.random_tangent(I, rng);
    EXPECT_LT((g.group_exp(X) - exp(r, I, X)).norm(), 1e-10);
    const Eigen::Matrix3d small = 0.5 * X / X.norm();
    EXPECT_LT((g.group_log(g.group_exp(small)) - small).norm(), 1e-10);
    const Eigen::Matrix3d R = g.group_exp(small);
    EXPECT_LT((g.group_log(R) - log(r, I, R)).norm(), 1e-10);
  }
}

TEST(Group, RotationGroupLogUndefinedAtPi) {
  const RotGroup g = rot_group();
  const Eigen::Matrix3d half_turn = Eigen::Vector3d(-1, -1, 1).asDiagonal();
  try {
    g.group_log(half_turn);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryErrorKind::LogUndefined);
  }
}

TEST(Group, InheritsManifoldOperations) {
  const RotGroup g = rot_group();
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  EXPECT_NEAR(distance(g, I, g.group_exp(skew_z(kPi / 2))), kPi / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(g.descriptor(), Rotations<3>().descriptor());
}

}  // namespace
}  // namespace manifolds
