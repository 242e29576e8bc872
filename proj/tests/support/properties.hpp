#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "manifolds/core/basis.hpp"
#include "manifolds/core/manifold.hpp"
#include "support/sampling.hpp"

namespace manifolds::testing {

/// Interface-level properties shared by every manifold: roundtrips, metric
/// axioms, transport isometry, basis round trips, projection idempotence,
/// in-place/allocating equivalence and output aliasing.
template <Manifold M>
void check_manifold_properties(const M& m, std::uint64_t seed) {
  SCOPED_TRACE(to_string(m.descriptor()));
  EXPECT_EQ(m.manifold_dimension(), manifold_dimension(m.descriptor()));
  EXPECT_GE(m.manifold_dimension(), 1);

  const RoundtripStats rt = roundtrip_stats(m, 1000, seed);
  EXPECT_LT(rt.max_log_relative_error, 1e-9);
  EXPECT_LT(rt.max_distance_error, 1e-9);
  EXPECT_LT(transport_isometry_error(m, 1000, seed + 1), 1e-9);

  std::mt19937_64 rng(seed + 2);
  double worst_symmetry = 0.0;
  double worst_triangle = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const PointOf<M> a = m.random_point(rng);
    const PointOf<M> b = m.random_point(rng);
    const PointOf<M> c = m.random_point(rng);
    const double ab = m.distance(a, b);
    worst_symmetry = std::max(worst_symmetry, std::abs(ab - m.distance(b, a)));
    worst_triangle = std::max(worst_triangle, m.distance(a, c) - ab - m.distance(b, c));
  }
  EXPECT_LE(worst_symmetry, 1e-12);
  EXPECT_LE(worst_triangle, 1e-9);

  for (int i = 0; i < 50; ++i) {
    const PointOf<M> p = m.random_point(rng);
    ASSERT_TRUE(m.is_point(p, kDefaultTolerance));
    const TangentOf<M> X = m.random_tangent(p, rng);
    ASSERT_TRUE(m.is_tangent(p, X, kDefaultTolerance));

    EXPECT_LE(m.distance(p, p), 1e-12);
    EXPECT_TRUE(is_approx(exp(m, p, zero_vector(m)), p, 1e-14));

    const Basis<M> basis = default_basis(m, p);
    ASSERT_EQ(static_cast<Index>(basis.vectors.size()), m.manifold_dimension());
    for (std::size_t a = 0; a < basis.vectors.size(); ++a) {
      EXPECT_TRUE(m.is_tangent(p, basis.vectors[a], 1e-9));
      for (std::size_t b = 0; b < basis.vectors.size(); ++b)
        EXPECT_NEAR(m.inner(p, basis.vectors[a], basis.vectors[b]), a == b ? 1.0 : 0.0, 1e-10);
    }
    const Eigen::VectorXd c = get_coordinates(m, p, X, basis);
    const TangentOf<M> X_back = get_vector(m, p, c, basis);
    EXPECT_LT(ambient_distance(X_back, X) / std::max(1.0, ambient_norm(X)), 1e-12);
    Eigen::VectorXd c2 = Eigen::VectorXd::Random(m.manifold_dimension());
    EXPECT_LT((get_coordinates(m, p, get_vector(m, p, c2, basis), basis) - c2).norm(), 1e-12);

    const TangentOf<M> P1 = project_tangent(m, p, X);
    const TangentOf<M> P2 = project_tangent(m, p, P1);
    EXPECT_LT(ambient_distance(P1, P2), 1e-12);
    EXPECT_TRUE(is_approx(project_point(m, p), p, 1e-10));

    TangentOf<M> V = random_tangent_with_norm_below(m, p, rng, roundtrip_norm_bound(m));
    const PointOf<M> q = exp(m, p, V);
    EXPECT_TRUE(m.is_point(q, 1e-9));
    PointOf<M> q_inplace = m.allocate_point();
    exp_to(m, q_inplace, p, V);
    EXPECT_TRUE(bit_equal(q, q_inplace));
    const TangentOf<M> L = log(m, p, q);
    EXPECT_TRUE(m.is_tangent(p, L, 1e-9));
    TangentOf<M> L_inplace = m.allocate_tangent();
    log_to(m, L_inplace, p, q);
    EXPECT_TRUE(bit_equal(L, L_inplace));
    const TangentOf<M> T = parallel_transport(m, p, q, X);
    EXPECT_TRUE(m.is_tangent(q, T, 1e-8 * std::max(1.0, ambient_norm(T))));

    PointOf<M> aliased = p;
    exp_to(m, aliased, aliased, V);
    EXPECT_TRUE(bit_equal(aliased, q));
    TangentOf<M> aliased_t = X;
    parallel_transport_to(m, aliased_t, p, q, aliased_t);
    EXPECT_TRUE(bit_equal(aliased_t, T));
  }
}

}  // namespace manifolds::testing
