#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Stopping rule and Armijo backtracking constants for riemannian_mean_gd.
/// The cost has Hessian close to 2 Id near the mean, so the initial step 0.5
/// is the classical Karcher fixed-point update.
struct MeanConfig {
  double tol = 1e-8;
  int max_iterations = 200;
  double initial_step = 0.5;
  double contraction = 0.5;
  double sufficient_decrease = 1e-4;
  int max_backtracks = 60;
};

template <Manifold M>
struct MeanResult {
  PointOf<M> mean;
  int iterations = 0;
  double final_grad_norm = 0.0;
};

namespace detail {

template <Manifold M>
double check_weights(const std::vector<PointOf<M>>& points, const std::vector<double>& weights) {
  if (points.empty())
    throw GeometryError(GeometryErrorKind::InvalidArgument, "mean of an empty data set");
  if (weights.size() != points.size())
    throw GeometryError(GeometryErrorKind::DimensionMismatch, "one weight per data point required");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw GeometryError(GeometryErrorKind::InvalidArgument, "weights must be finite and nonnegative");
    total += w;
  }
  if (!(total > 0.0))
    throw GeometryError(GeometryErrorKind::InvalidArgument, "weights must not all be zero");
  return total;
}

inline std::vector<double> equal_weights(std::size_t n) { return std::vector<double>(n, 1.0); }

}  // namespace detail

/// F(q) = (1/W) sum_k w_k d(q, p_k)^2 with W = sum_k w_k.
template <Manifold M>
double mean_cost(const M& m, const std::vector<PointOf<M>>& points, const std::vector<double>& weights,
                 const PointOf<M>& q) {
  const double total = detail::check_weights<M>(points, weights);
  double sum = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const double d = m.distance(q, points[k]);
    sum += weights[k] * d * d;
  }
  return sum / total;
}

/// grad F(q) = -(2/W) sum_k w_k log_q p_k, the exact Riemannian gradient of
/// mean_cost.
template <Manifold M>
void mean_gradient_to(const M& m, TangentOf<M>& grad, const std::vector<PointOf<M>>& points,
                      const std::vector<double>& weights, const PointOf<M>& q) {
  const double total = detail::check_weights<M>(points, weights);
  TangentOf<M> X = m.allocate_tangent();
  TangentOf<M> acc = m.allocate_tangent();
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (weights[k] == 0.0) continue;
    m.log_to(X, q, points[k]);
    axpy(weights[k], X, acc);
  }
  scale_in_place(acc, -2.0 / total);
  grad = std::move(acc);
}

template <Manifold M>
TangentOf<M> mean_gradient(const M& m, const std::vector<PointOf<M>>& points,
                           const std::vector<double>& weights, const PointOf<M>& q) {
  TangentOf<M> grad = m.allocate_tangent();
  mean_gradient_to(m, grad, points, weights, q);
  return grad;
}

/// Weighted Karcher mean by Riemannian gradient descent from points[0] (the
/// first point with positive weight), q <- exp_q(-s grad F(q)) with Armijo
/// backtracking on s. Stops when |grad F| < cfg.tol.
///
/// Near the optimum the Armijo decrease can fall below the rounding error of
/// F; a step is then also accepted when F does not grow beyond that rounding
/// error and the gradient norm at least halves.
template <Manifold M>
MeanResult<M> riemannian_mean_gd(const M& m, const std::vector<PointOf<M>>& points,
                                 const std::vector<double>& weights, const MeanConfig& cfg = {}) {
  detail::check_weights<M>(points, weights);
  std::size_t start = 0;
  while (weights[start] == 0.0) ++start;

  PointOf<M> q = points[start];
  TangentOf<M> grad = mean_gradient(m, points, weights, q);
  double grad_norm = norm(m, q, grad);
  double cost = mean_cost(m, points, weights, q);

  PointOf<M> candidate = m.allocate_point();
  TangentOf<M> step_vec = m.allocate_tangent();
  TangentOf<M> candidate_grad = m.allocate_tangent();
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    if (grad_norm < cfg.tol) return {std::move(q), iter, grad_norm};

    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(cost);
    double step = cfg.initial_step;
    bool accepted = false;
    for (int bt = 0; bt <= cfg.max_backtracks && !accepted; ++bt, step *= cfg.contraction) {
      step_vec = grad;
      scale_in_place(step_vec, -step);
      m.exp_to(candidate, q, step_vec);
      const double candidate_cost = mean_cost(m, points, weights, candidate);
      const bool armijo = candidate_cost <= cost - cfg.sufficient_decrease * step * grad_norm * grad_norm;
      if (!armijo && candidate_cost > cost + slack) continue;
      mean_gradient_to(m, candidate_grad, points, weights, candidate);
      const double candidate_norm = norm(m, candidate, candidate_grad);
      if (!armijo && !(candidate_norm <= 0.5 * grad_norm)) continue;
      std::swap(q, candidate);
      std::swap(grad, candidate_grad);
      grad_norm = candidate_norm;
      cost = candidate_cost;
      accepted = true;
    }
    if (!accepted)
      throw GeometryError(GeometryErrorKind::MaxIterationsExceeded,
                          "line search found no acceptable step at gradient norm " +
                              std::to_string(grad_norm));
  }
  if (grad_norm < cfg.tol) return {std::move(q), cfg.max_iterations, grad_norm};
  throw GeometryError(GeometryErrorKind::MaxIterationsExceeded,
                      "gradient descent did not reach the tolerance, gradient norm " +
                          std::to_string(grad_norm));
}

template <Manifold M>
MeanResult<M> riemannian_mean_gd(const M& m, const std::vector<PointOf<M>>& points,
                                 const MeanConfig& cfg = {}) {
  return riemannian_mean_gd(m, points, detail::equal_weights(points.size()), cfg);
}

/// On-line geodesic interpolation in input order:
/// m_k = gamma(w_k / W_k; m_{k-1}, p_k) with W_k the running weight sum.
/// Exact on flat spaces; order dependent in general.
template <Manifold M>
PointOf<M> riemannian_mean_interp(const M& m, const std::vector<PointOf<M>>& points,
                                  const std::vector<double>& weights) {
  detail::check_weights<M>(points, weights);
  std::size_t k = 0;
  while (weights[k] == 0.0) ++k;
  PointOf<M> mean = points[k];
  double running = weights[k];
  for (++k; k < points.size(); ++k) {
    if (weights[k] == 0.0) continue;
    running += weights[k];
    shortest_geodesic_to(m, mean, mean, points[k], weights[k] / running);
  }
  return mean;
}

template <Manifold M>
PointOf<M> riemannian_mean_interp(const M& m, const std::vector<PointOf<M>>& points) {
  return riemannian_mean_interp(m, points, detail::equal_weights(points.size()));
}

/// Bias-corrected weighted variance sum_k w_k d(mean, p_k)^2 / (W - sum_k w_k^2 / W),
/// which is (1/(N-1)) sum_k d^2 for equal weights. Zero when the correction
/// leaves no degrees of freedom (a single weighted point).
template <Manifold M>
double riemannian_variance(const M& m, const std::vector<PointOf<M>>& points,
                           const std::vector<double>& weights, const PointOf<M>& mean) {
  const double total = detail::check_weights<M>(points, weights);
  double sum = 0.0;
  double sum_sq_weights = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const double d = m.distance(mean, points[k]);
    sum += weights[k] * d * d;
    sum_sq_weights += weights[k] * weights[k];
  }
  const double denom = total - sum_sq_weights / total;
  if (!(denom > 0.0)) return 0.0;
  return sum / denom;
}

template <Manifold M>
double riemannian_variance(const M& m, const std::vector<PointOf<M>>& points, const PointOf<M>& mean) {
  return riemannian_variance(m, points, detail::equal_weights(points.size()), mean);
}

}  // namespace manifolds
