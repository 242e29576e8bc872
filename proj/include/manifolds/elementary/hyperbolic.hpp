#pragma once

#include <limits>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

// Hyperbolic space H^n in three point representations:
//
//   Hyperboloid        x in R^{n+1}, <x, x>_L = -1, x_n > 0, where
//                      <a, b>_L = a_0 b_0 + ... + a_{n-1} b_{n-1} - a_n b_n
//                      (signature (+,...,+,-), last coordinate timelike)
//   PoincareBall       y in R^n, |y| < 1
//   PoincareHalfSpace  (u, v) in R^{n-1} x R, v > 0
//
// Closed forms live on the hyperboloid; the other two representations convert
// points and tangents there, apply the operation, and convert back.

/// Minkowski form <a, b>_L with the last coordinate timelike.
double minkowski_inner(const Eigen::Ref<const Eigen::VectorXd>& a,
                       const Eigen::Ref<const Eigen::VectorXd>& b);

/// Maps a point between representations; an isometry of H^n.
Eigen::VectorXd hyperbolic_convert(const Eigen::Ref<const Eigen::VectorXd>& p, Representation from,
                                   Representation to);

/// Pushes a tangent vector X at p (both in `from`) forward to the tangent space
/// at hyperbolic_convert(p, from, to).
Eigen::VectorXd hyperbolic_convert_tangent(const Eigen::Ref<const Eigen::VectorXd>& p,
                                           const Eigen::Ref<const Eigen::VectorXd>& X,
                                           Representation from, Representation to);

class Hyperbolic {
 public:
  using Point = Eigen::VectorXd;
  using Tangent = Eigen::VectorXd;
  using PointRef = Eigen::Ref<Point>;
  using ConstPointRef = const Eigen::Ref<const Point>&;

  /// The representation must be given explicitly; there is no default.
  Hyperbolic(Index n, Representation representation);

  Index n() const { return n_; }
  Representation representation() const { return rep_; }
  /// Length of the coordinate vector (n + 1 on the hyperboloid, n otherwise).
  Index array_size() const { return rep_ == Representation::Hyperboloid ? n_ + 1 : n_; }

  ManifoldDescriptor descriptor() const;
  Index manifold_dimension() const { return n_; }
  EmbeddingInfo embedding() const { return {{array_size()}, false}; }
  double injectivity_radius() const { return std::numeric_limits<double>::infinity(); }

  Point allocate_point() const { return Point::Zero(array_size()); }
  Tangent allocate_tangent() const { return Tangent::Zero(array_size()); }

  bool is_point(ConstPointRef p, double tol) const;
  bool is_tangent(ConstPointRef p, ConstPointRef X, double tol) const;

  void exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const;
  void log_to(PointRef X, ConstPointRef p, ConstPointRef q) const;
  double distance(ConstPointRef p, ConstPointRef q) const;
  double inner(ConstPointRef p, ConstPointRef X, ConstPointRef Y) const;
  void parallel_transport_to(PointRef Y, ConstPointRef p, ConstPointRef q, ConstPointRef X) const;

  /// Hyperboloid: lift the spatial part, x_n = sqrt(1 + |x'|^2). Ball and half
  /// space: identity inside the model, ProjectionUndefined outside.
  void project_point_to(PointRef q, ConstPointRef a) const;
  void project_tangent_to(PointRef Y, ConstPointRef p, ConstPointRef a) const;

  /// Minkowski Gram-Schmidt of the spatial unit vectors on the hyperboloid,
  /// pushed forward for the other representations.
  std::vector<Tangent> basis_vectors(ConstPointRef p) const;

  /// exp at the hyperboloid origin of a standard Gaussian tangent.
  template <class Rng>
  Point random_point(Rng& rng) const {
    std::normal_distribution<double> normal;
    Eigen::VectorXd origin = Eigen::VectorXd::Zero(n_ + 1);
    origin(n_) = 1.0;
    Eigen::VectorXd X = Eigen::VectorXd::Zero(n_ + 1);
    for (Index i = 0; i < n_; ++i) X(i) = normal(rng);
    Eigen::VectorXd x = hyperboloid_exp(origin, X);
    return hyperbolic_convert(x, Representation::Hyperboloid, rep_);
  }

  template <class Rng>
  Tangent random_tangent(ConstPointRef p, Rng& rng) const {
    std::normal_distribution<double> normal;
    Tangent a(array_size());
    for (Index i = 0; i < a.size(); ++i) a(i) = normal(rng);
    Tangent out = allocate_tangent();
    project_tangent_to(out, p, a);
    return out;
  }

  static Eigen::VectorXd hyperboloid_exp(const Eigen::Ref<const Eigen::VectorXd>& p,
                                         const Eigen::Ref<const Eigen::VectorXd>& X);
  static Eigen::VectorXd hyperboloid_log(const Eigen::Ref<const Eigen::VectorXd>& p,
                                         const Eigen::Ref<const Eigen::VectorXd>& q);
  static double hyperboloid_distance(const Eigen::Ref<const Eigen::VectorXd>& p,
                                     const Eigen::Ref<const Eigen::VectorXd>& q);
  static Eigen::VectorXd hyperboloid_transport(const Eigen::Ref<const Eigen::VectorXd>& p,
                                               const Eigen::Ref<const Eigen::VectorXd>& q,
                                               const Eigen::Ref<const Eigen::VectorXd>& X);

 private:
  Index n_;
  Representation rep_;
};

}  // namespace manifolds
