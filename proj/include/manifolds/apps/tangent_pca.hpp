#pragma once

#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "manifolds/apps/statistics.hpp"
#include "manifolds/core/basis.hpp"

namespace manifolds {

template <Manifold M>
struct TpcaResult {
  PointOf<M> mean;
  Basis<M> basis;
  /// Columns are principal directions in basis coordinates.
  Eigen::MatrixXd components;
  /// Sample variances along the components, descending.
  Eigen::VectorXd variances;
};

/// Tangent-space PCA: Karcher mean, log-map coordinates in the default basis
/// at the mean, then eigendecomposition of their sample covariance (centered
/// on the coordinate mean, normalized by N - 1). Each component is signed so
/// that its largest-magnitude entry is positive.
template <Manifold M>
TpcaResult<M> tangent_pca(const M& m, const std::vector<PointOf<M>>& points, const MeanConfig& cfg = {}) {
  if (points.size() < 2)
    throw GeometryError(GeometryErrorKind::InvalidArgument, "tangent PCA needs at least two points");
  const Index n = static_cast<Index>(points.size());
  const Index d = m.manifold_dimension();

  MeanResult<M> mean = riemannian_mean_gd(m, points, cfg);
  Basis<M> basis = default_basis(m, mean.mean);

  Eigen::MatrixXd coords(d, n);
  TangentOf<M> X = m.allocate_tangent();
  for (Index k = 0; k < n; ++k) {
    m.log_to(X, mean.mean, points[static_cast<std::size_t>(k)]);
    get_coordinates_to(m, coords.col(k), mean.mean, X, basis);
  }
  const Eigen::VectorXd center = coords.rowwise().mean();
  const Eigen::MatrixXd centered = coords.colwise() - center;
  const Eigen::MatrixXd cov = centered * centered.transpose() / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success)
    throw GeometryError(GeometryErrorKind::DecompositionFailed, "covariance eigendecomposition failed");

  Eigen::MatrixXd components(d, d);
  Eigen::VectorXd variances(d);
  for (Index j = 0; j < d; ++j) {
    const Index src = d - 1 - j;
    Eigen::VectorXd v = es.eigenvectors().col(src);
    Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0.0) v = -v;
    components.col(j) = v;
    variances(j) = es.eigenvalues()(src);
  }
  return {std::move(mean.mean), std::move(basis), std::move(components), std::move(variances)};
}

}  // namespace manifolds
