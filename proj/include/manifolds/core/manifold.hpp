#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "manifolds/core/array_ops.hpp"
#include "manifolds/core/descriptor.hpp"
#include "manifolds/core/errors.hpp"

namespace manifolds {

/// Absolute tolerance on constraint residuals used by is_point/is_tangent and
/// the validation decorator unless overridden.
inline constexpr double kDefaultTolerance = 1e-8;

enum class RetractionMethod { Exponential, Projection };
enum class InverseRetractionMethod { Logarithmic, Projection };
enum class VectorTransportMethod { Parallel, Projection };

/// How a manifold sits in its ambient array space. When `isometric` is set the
/// Riemannian metric is the ambient Frobenius inner product restricted to
/// tangent spaces.
struct EmbeddingInfo {
  std::vector<Index> ambient_shape;
  bool isometric = false;

  bool operator==(const EmbeddingInfo&) const = default;
};

/// The member-level contract every manifold implements. Operations producing a
/// point or tangent write into a caller-provided first argument (`*_to`
/// members); the free functions below add the allocating forms. Output
/// arguments may alias inputs.
template <class M>
concept Manifold = requires(const M& m, typename M::Point& q, typename M::Tangent& Y,
                            const typename M::Point& p, const typename M::Tangent& X,
                            double tol, std::mt19937_64& rng) {
  typename M::Point;
  typename M::Tangent;
  { m.descriptor() } -> std::same_as<ManifoldDescriptor>;
  { m.manifold_dimension() } -> std::convertible_to<Index>;
  { m.embedding() } -> std::same_as<EmbeddingInfo>;
  { m.injectivity_radius() } -> std::convertible_to<double>;
  { m.allocate_point() } -> std::same_as<typename M::Point>;
  { m.allocate_tangent() } -> std::same_as<typename M::Tangent>;
  { m.is_point(p, tol) } -> std::same_as<bool>;
  { m.is_tangent(p, X, tol) } -> std::same_as<bool>;
  m.exp_to(q, p, X);
  m.log_to(Y, p, p);
  { m.distance(p, p) } -> std::convertible_to<double>;
  { m.inner(p, X, X) } -> std::convertible_to<double>;
  m.parallel_transport_to(Y, p, p, X);
  m.project_point_to(q, p);
  m.project_tangent_to(Y, p, X);
  { m.basis_vectors(p) } -> std::same_as<std::vector<typename M::Tangent>>;
  { m.random_point(rng) } -> std::same_as<typename M::Point>;
  { m.random_tangent(p, rng) } -> std::same_as<typename M::Tangent>;
};

template <class M>
concept HasProjectionRetraction =
    requires(const M& m, typename M::Point& q, typename M::Tangent& Y,
             const typename M::Point& p, const typename M::Tangent& X) {
      m.projection_retract_to(q, p, X);
      m.projection_inverse_retract_to(Y, p, p);
    };

template <Manifold M>
using PointOf = typename M::Point;
template <Manifold M>
using TangentOf = typename M::Tangent;

// ---------------------------------------------------------------------------
// Queries

template <Manifold M>
Index manifold_dimension(const M& m) {
  return m.manifold_dimension();
}

template <Manifold M>
EmbeddingInfo embedding(const M& m) {
  return m.embedding();
}

template <Manifold M>
bool is_point(const M& m, const PointOf<M>& p, double tol = kDefaultTolerance) {
  return m.is_point(p, tol);
}

template <Manifold M>
bool is_tangent(const M& m, const PointOf<M>& p, const TangentOf<M>& X,
                double tol = kDefaultTolerance) {
  return m.is_tangent(p, X, tol);
}

template <Manifold M>
double distance(const M& m, const PointOf<M>& p, const PointOf<M>& q) {
  return m.distance(p, q);
}

template <Manifold M>
double inner(const M& m, const PointOf<M>& p, const TangentOf<M>& X, const TangentOf<M>& Y) {
  return m.inner(p, X, Y);
}

template <Manifold M>
double norm(const M& m, const PointOf<M>& p, const TangentOf<M>& X) {
  return std::sqrt(std::max(0.0, m.inner(p, X, X)));
}

template <Manifold M>
TangentOf<M> zero_vector(const M& m) {
  return m.allocate_tangent();
}

// ---------------------------------------------------------------------------
// Exponential / logarithmic maps

template <Manifold M>
void exp_to(const M& m, PointOf<M>& q, const PointOf<M>& p, const TangentOf<M>& X) {
  m.exp_to(q, p, X);
}

template <Manifold M>
PointOf<M> exp(const M& m, const PointOf<M>& p, const TangentOf<M>& X) {
  PointOf<M> q = m.allocate_point();
  m.exp_to(q, p, X);
  return q;
}

template <Manifold M>
void log_to(const M& m, TangentOf<M>& X, const PointOf<M>& p, const PointOf<M>& q) {
  m.log_to(X, p, q);
}

template <Manifold M>
TangentOf<M> log(const M& m, const PointOf<M>& p, const PointOf<M>& q) {
  TangentOf<M> X = m.allocate_tangent();
  m.log_to(X, p, q);
  return X;
}

/// Point at parameter t on the geodesic with initial velocity X.
template <Manifold M>
PointOf<M> geodesic(const M& m, const PointOf<M>& p, const TangentOf<M>& X, double t) {
  return exp(m, p, scaled(X, t));
}

/// gamma(t; p, q) = exp_p(t log_p q); t = 0 returns p and t = 1 returns q exactly.
template <Manifold M>
void shortest_geodesic_to(const M& m, PointOf<M>& out, const PointOf<M>& p,
                          const PointOf<M>& q, double t) {
  if (t == 0.0) {
    out = p;
    return;
  }
  if (t == 1.0) {
    out = q;
    return;
  }
  TangentOf<M> X = m.allocate_tangent();
  m.log_to(X, p, q);
  scale_in_place(X, t);
  m.exp_to(out, p, X);
}

template <Manifold M>
PointOf<M> shortest_geodesic(const M& m, const PointOf<M>& p, const PointOf<M>& q, double t) {
  PointOf<M> out = m.allocate_point();
  shortest_geodesic_to(m, out, p, q, t);
  return out;
}

// ---------------------------------------------------------------------------
// Retractions

template <Manifold M>
void retract_to(const M& m, PointOf<M>& q, const PointOf<M>& p, const TangentOf<M>& X,
                RetractionMethod method = RetractionMethod::Exponential) {
  switch (method) {
    case RetractionMethod::Exponential:
      m.exp_to(q, p, X);
      return;
    case RetractionMethod::Projection:
      if constexpr (HasProjectionRetraction<M>) {
        m.projection_retract_to(q, p, X);
        return;
      }
      break;
  }
  throw GeometryError(GeometryErrorKind::MethodUnsupported,
                      "retraction method not available on " + to_string(m.descriptor()));
}

template <Manifold M>
PointOf<M> retract(const M& m, const PointOf<M>& p, const TangentOf<M>& X,
                   RetractionMethod method = RetractionMethod::Exponential) {
  PointOf<M> q = m.allocate_point();
  retract_to(m, q, p, X, method);
  return q;
}

template <Manifold M>
void inverse_retract_to(const M& m, TangentOf<M>& X, const PointOf<M>& p, const PointOf<M>& q,
                        InverseRetractionMethod method = InverseRetractionMethod::Logarithmic) {
  switch (method) {
    case InverseRetractionMethod::Logarithmic:
      m.log_to(X, p, q);
      return;
    case InverseRetractionMethod::Projection:
      if constexpr (HasProjectionRetraction<M>) {
        m.projection_inverse_retract_to(X, p, q);
        return;
      }
      break;
  }
  throw GeometryError(GeometryErrorKind::MethodUnsupported,
                      "inverse retraction method not available on " + to_string(m.descriptor()));
}

template <Manifold M>
TangentOf<M> inverse_retract(const M& m, const PointOf<M>& p, const PointOf<M>& q,
                             InverseRetractionMethod method = InverseRetractionMethod::Logarithmic) {
  TangentOf<M> X = m.allocate_tangent();
  inverse_retract_to(m, X, p, q, method);
  return X;
}

// ---------------------------------------------------------------------------
// Transports

template <Manifold M>
void parallel_transport_to(const M& m, TangentOf<M>& Y, const PointOf<M>& p, const PointOf<M>& q,
                           const TangentOf<M>& X) {
  m.parallel_transport_to(Y, p, q, X);
}

template <Manifold M>
TangentOf<M> parallel_transport(const M& m, const PointOf<M>& p, const PointOf<M>& q,
                                const TangentOf<M>& X) {
  TangentOf<M> Y = m.allocate_tangent();
  m.parallel_transport_to(Y, p, q, X);
  return Y;
}

template <Manifold M>
void vector_transport_to(const M& m, TangentOf<M>& Y, const PointOf<M>& p, const PointOf<M>& q,
                         const TangentOf<M>& X,
                         VectorTransportMethod method = VectorTransportMethod::Parallel) {
  switch (method) {
    case VectorTransportMethod::Parallel:
      m.parallel_transport_to(Y, p, q, X);
      return;
    case VectorTransportMethod::Projection:
      m.project_tangent_to(Y, q, X);
      return;
  }
  throw GeometryError(GeometryErrorKind::MethodUnsupported, "unknown vector transport");
}

template <Manifold M>
TangentOf<M> vector_transport(const M& m, const PointOf<M>& p, const PointOf<M>& q,
                              const TangentOf<M>& X,
                              VectorTransportMethod method = VectorTransportMethod::Parallel) {
  TangentOf<M> Y = m.allocate_tangent();
  vector_transport_to(m, Y, p, q, X, method);
  return Y;
}

// ---------------------------------------------------------------------------
// Projections from the ambient space

template <Manifold M>
void project_point_to(const M& m, PointOf<M>& q, const PointOf<M>& a) {
  m.project_point_to(q, a);
}

template <Manifold M>
PointOf<M> project_point(const M& m, const PointOf<M>& a) {
  PointOf<M> q = m.allocate_point();
  m.project_point_to(q, a);
  return q;
}

template <Manifold M>
void project_tangent_to(const M& m, TangentOf<M>& Y, const PointOf<M>& p, const TangentOf<M>& a) {
  m.project_tangent_to(Y, p, a);
}

template <Manifold M>
TangentOf<M> project_tangent(const M& m, const PointOf<M>& p, const TangentOf<M>& a) {
  TangentOf<M> Y = m.allocate_tangent();
  m.project_tangent_to(Y, p, a);
  return Y;
}

// ---------------------------------------------------------------------------
// Sampling

template <Manifold M, class Rng>
PointOf<M> random_point(const M& m, Rng& rng) {
  return m.random_point(rng);
}

template <Manifold M, class Rng>
TangentOf<M> random_tangent(const M& m, const PointOf<M>& p, Rng& rng) {
  return m.random_tangent(p, rng);
}

}  // namespace manifolds
