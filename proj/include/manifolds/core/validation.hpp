#pragma once

#include <string>
#include <utility>
#include <vector>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Decorator that checks every input and output of the wrapped manifold
/// against is_point / is_tangent with tolerance `tol` and throws
/// ValidationError on the first violation. Results are computed into
/// temporaries and only copied to the output after passing, so outputs may
/// alias inputs exactly as with the raw manifold.
template <Manifold M>
class ValidationManifold {
 public:
  using Point = typename M::Point;
  using Tangent = typename M::Tangent;

  explicit ValidationManifold(M inner, double tol = kDefaultTolerance)
      : inner_(std::move(inner)), tol_(tol) {
    if (!(tol > 0.0)) throw ValidationError("validation tolerance must be positive");
  }

  const M& inner_manifold() const { return inner_; }
  double tolerance() const { return tol_; }

  ManifoldDescriptor descriptor() const { return inner_.descriptor(); }
  Index manifold_dimension() const { return inner_.manifold_dimension(); }
  EmbeddingInfo embedding() const { return inner_.embedding(); }
  double injectivity_radius() const { return inner_.injectivity_radius(); }
  Point allocate_point() const { return inner_.allocate_point(); }
  Tangent allocate_tangent() const { return inner_.allocate_tangent(); }

  bool is_point(const Point& p, double tol) const { return inner_.is_point(p, tol); }
  bool is_tangent(const Point& p, const Tangent& X, double tol) const {
    return inner_.is_tangent(p, X, tol);
  }

  void exp_to(Point& q, const Point& p, const Tangent& X) const {
    require_point("exp", "p", p);
    require_tangent("exp", "X", p, X);
    Point out = inner_.allocate_point();
    inner_.exp_to(out, p, X);
    require_point("exp", "result", out);
    q = std::move(out);
  }

  void log_to(Tangent& X, const Point& p, const Point& q) const {
    require_point("log", "p", p);
    require_point("log", "q", q);
    Tangent out = inner_.allocate_tangent();
    inner_.log_to(out, p, q);
    require_tangent("log", "result", p, out);
    X = std::move(out);
  }

  double distance(const Point& p, const Point& q) const {
    require_point("distance", "p", p);
    require_point("distance", "q", q);
    return inner_.distance(p, q);
  }

  double inner(const Point& p, const Tangent& X, const Tangent& Y) const {
    require_point("inner", "p", p);
    require_tangent("inner", "X", p, X);
    require_tangent("inner", "Y", p, Y);
    return inner_.inner(p, X, Y);
  }

  void parallel_transport_to(Tangent& Y, const Point& p, const Point& q, const Tangent& X) const {
    require_point("parallel_transport", "p", p);
    require_point("parallel_transport", "q", q);
    require_tangent("parallel_transport", "X", p, X);
    Tangent out = inner_.allocate_tangent();
    inner_.parallel_transport_to(out, p, q, X);
    require_tangent("parallel_transport", "result", q, out);
    Y = std::move(out);
  }

  void projection_retract_to(Point& q, const Point& p, const Tangent& X) const
    requires HasProjectionRetraction<M>
  {
    require_point("retract", "p", p);
    require_tangent("retract", "X", p, X);
    Point out = inner_.allocate_point();
    inner_.projection_retract_to(out, p, X);
    require_point("retract", "result", out);
    q = std::move(out);
  }

  void projection_inverse_retract_to(Tangent& X, const Point& p, const Point& q) const
    requires HasProjectionRetraction<M>
  {
    require_point("inverse_retract", "p", p);
    require_point("inverse_retract", "q", q);
    Tangent out = inner_.allocate_tangent();
    inner_.projection_inverse_retract_to(out, p, q);
    require_tangent("inverse_retract", "result", p, out);
    X = std::move(out);
  }

  void project_point_to(Point& q, const Point& a) const {
    Point out = inner_.allocate_point();
    inner_.project_point_to(out, a);
    require_point("project_point", "result", out);
    q = std::move(out);
  }

  void project_tangent_to(Tangent& Y, const Point& p, const Tangent& a) const {
    require_point("project_tangent", "p", p);
    Tangent out = inner_.allocate_tangent();
    inner_.project_tangent_to(out, p, a);
    require_tangent("project_tangent", "result", p, out);
    Y = std::move(out);
  }

  std::vector<Tangent> basis_vectors(const Point& p) const {
    require_point("basis_vectors", "p", p);
    return inner_.basis_vectors(p);
  }

  template <class Rng>
  Point random_point(Rng& rng) const {
    Point p = inner_.random_point(rng);
    require_point("random_point", "result", p);
    return p;
  }

  template <class Rng>
  Tangent random_tangent(const Point& p, Rng& rng) const {
    require_point("random_tangent", "p", p);
    Tangent X = inner_.random_tangent(p, rng);
    require_tangent("random_tangent", "result", p, X);
    return X;
  }

 private:
  void require_point(const char* op, const char* what, const Point& p) const {
    if (!inner_.is_point(p, tol_))
      throw ValidationError(std::string(op) + ": " + what + " is not a point of " +
                            to_string(inner_.descriptor()));
  }

  void require_tangent(const char* op, const char* what, const Point& p, const Tangent& X) const {
    if (!inner_.is_tangent(p, X, tol_))
      throw ValidationError(std::string(op) + ": " + what + " is not a tangent vector of " +
                            to_string(inner_.descriptor()));
  }

  M inner_;
  double tol_;
};

}  // namespace manifolds
