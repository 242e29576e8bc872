#pragma once

#include <vector>

#include <Eigen/Core>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Ordered orthonormal basis of T_base M with manifold_dimension vectors.
template <Manifold M>
struct Basis {
  PointOf<M> base;
  std::vector<TangentOf<M>> vectors;
};

/// Deterministic orthonormal basis at p; the construction is manifold-specific
/// and documented on each manifold's basis_vectors.
template <Manifold M>
Basis<M> default_basis(const M& m, const PointOf<M>& p) {
  return Basis<M>{p, m.basis_vectors(p)};
}

namespace detail {

template <Manifold M>
void check_basis(const M& m, const PointOf<M>& p, const Basis<M>& basis) {
  if (static_cast<Index>(basis.vectors.size()) != m.manifold_dimension())
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "basis length differs from the manifold dimension");
  if (!is_approx(basis.base, p, 1e-12))
    throw GeometryError(GeometryErrorKind::InvalidArgument,
                        "basis is attached to a different base point");
}

}  // namespace detail

/// c_i = <X, b_i>_p for the orthonormal basis b.
template <Manifold M>
void get_coordinates_to(const M& m, Eigen::Ref<Eigen::VectorXd> c, const PointOf<M>& p,
                        const TangentOf<M>& X, const Basis<M>& basis) {
  detail::check_basis(m, p, basis);
  if (c.size() != m.manifold_dimension())
    throw GeometryError(GeometryErrorKind::DimensionMismatch, "coordinate vector length");
  for (std::size_t i = 0; i < basis.vectors.size(); ++i)
    c(static_cast<Eigen::Index>(i)) = m.inner(p, X, basis.vectors[i]);
}

template <Manifold M>
Eigen::VectorXd get_coordinates(const M& m, const PointOf<M>& p, const TangentOf<M>& X,
                                const Basis<M>& basis) {
  Eigen::VectorXd c(m.manifold_dimension());
  get_coordinates_to(m, c, p, X, basis);
  return c;
}

/// X = sum_i c_i b_i.
template <Manifold M>
void get_vector_to(const M& m, TangentOf<M>& X, const PointOf<M>& p,
                   const Eigen::Ref<const Eigen::VectorXd>& c, const Basis<M>& basis) {
  detail::check_basis(m, p, basis);
  if (c.size() != m.manifold_dimension())
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "coordinate vector length differs from the manifold dimension");
  set_zero(X);
  for (std::size_t i = 0; i < basis.vectors.size(); ++i)
    axpy(c(static_cast<Eigen::Index>(i)), basis.vectors[i], X);
}

template <Manifold M>
TangentOf<M> get_vector(const M& m, const PointOf<M>& p, const Eigen::Ref<const Eigen::VectorXd>& c,
                        const Basis<M>& basis) {
  TangentOf<M> X = m.allocate_tangent();
  get_vector_to(m, X, p, c, basis);
  return X;
}

}  // namespace manifolds
