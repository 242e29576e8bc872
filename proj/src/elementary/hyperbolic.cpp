#include "manifolds/elementary/hyperbolic.hpp"

#include <cmath>

#include "manifolds/core/numeric.hpp"

namespace manifolds {

using Eigen::VectorXd;
using ConstVec = Eigen::Ref<const VectorXd>;

double minkowski_inner(const ConstVec& a, const ConstVec& b) {
  const Index n = a.size() - 1;
  return a.head(n).dot(b.head(n)) - a(n) * b(n);
}

namespace {

void require_size(const ConstVec& a, Index expected, const char* what) {
  if (a.size() != expected)
    throw GeometryError(GeometryErrorKind::DimensionMismatch, what);
}

VectorXd ball_to_hyperboloid(const ConstVec& y) {
  const Index n = y.size();
  const double s = y.squaredNorm();
  if (!(s < 1.0))
    throw GeometryError(GeometryErrorKind::InvalidArgument, "point lies outside the Poincare ball");
  VectorXd x(n + 1);
  x.head(n) = (2.0 / (1.0 - s)) * y;
  x(n) = (1.0 + s) / (1.0 - s);
  return x;
}

VectorXd hyperboloid_to_ball(const ConstVec& x) {
  const Index n = x.size() - 1;
  return x.head(n) / (1.0 + x(n));
}

// w = z - x_{n-1}, evaluated without cancellation when x_{n-1} > 0 using
// (z - x_{n-1})(z + x_{n-1}) = 1 + |x''|^2.
double half_space_denominator(const ConstVec& x) {
  const Index n = x.size() - 1;
  const double z = x(n);
  const double last = x(n - 1);
  if (last > 0.0) return (1.0 + x.head(n - 1).squaredNorm()) / (z + last);
  return z - last;
}

VectorXd hyperboloid_to_half_space(const ConstVec& x) {
  const Index n = x.size() - 1;
  const double w = half_space_denominator(x);
  VectorXd h(n);
  h.head(n - 1) = x.head(n - 1) / w;
  h(n - 1) = 1.0 / w;
  return h;
}

VectorXd half_space_to_hyperboloid(const ConstVec& h) {
  const Index n = h.size();
  const double v = h(n - 1);
  if (!(v > 0.0))
    throw GeometryError(GeometryErrorKind::InvalidArgument,
                        "point lies outside the Poincare half space");
  const double u2 = h.head(n - 1).squaredNorm();
  VectorXd x(n + 1);
  x.head(n - 1) = h.head(n - 1) / v;
  x(n - 1) = (v * v + u2 - 1.0) / (2.0 * v);
  x(n) = (1.0 + v * v + u2) / (2.0 * v);
  return x;
}

VectorXd to_hyperboloid(const ConstVec& p, Representation rep) {
  switch (rep) {
    case Representation::Hyperboloid:
      return p;
    case Representation::PoincareBall:
      return ball_to_hyperboloid(p);
    case Representation::PoincareHalfSpace:
      return half_space_to_hyperboloid(p);
    case Representation::Array:
      break;
  }
  throw GeometryError(GeometryErrorKind::InvalidArgument, "not a hyperbolic representation");
}

VectorXd from_hyperboloid(const ConstVec& x, Representation rep) {
  switch (rep) {
    case Representation::Hyperboloid:
      return x;
    case Representation::PoincareBall:
      return hyperboloid_to_ball(x);
    case Representation::PoincareHalfSpace:
      return hyperboloid_to_half_space(x);
    case Representation::Array:
      break;
  }
  throw GeometryError(GeometryErrorKind::InvalidArgument, "not a hyperbolic representation");
}

// Differential of to_hyperboloid at p (given in rep) applied to X.
VectorXd push_to_hyperboloid(const ConstVec& p, const ConstVec& X, Representation rep) {
  switch (rep) {
    case Representation::Hyperboloid:
      return X;
    case Representation::PoincareBall: {
      const Index n = p.size();
      const double s = p.squaredNorm();
      const double a = p.dot(X);
      const double inv = 1.0 / (1.0 - s);
      VectorXd dx(n + 1);
      dx.head(n) = 2.0 * inv * X + 4.0 * inv * inv * a * p;
      dx(n) = 4.0 * inv * inv * a;
      return dx;
    }
    case Representation::PoincareHalfSpace: {
      const Index n = p.size();
      const auto u = p.head(n - 1);
      const auto du = X.head(n - 1);
      const double v = p(n - 1);
      const double dv = X(n - 1);
      const double u2 = u.squaredNorm();
      const double udu = u.dot(du);
      VectorXd dx(n + 1);
      dx.head(n - 1) = du / v - u * (dv / (v * v));
      dx(n - 1) = (2.0 * v * udu + (v * v - u2 + 1.0) * dv) / (2.0 * v * v);
      dx(n) = (2.0 * v * udu + (v * v - 1.0 - u2) * dv) / (2.0 * v * v);
      return dx;
    }
    case Representation::Array:
      break;
  }
  throw GeometryError(GeometryErrorKind::InvalidArgument, "not a hyperbolic representation");
}

// Differential of from_hyperboloid at the hyperboloid point x applied to X.
VectorXd push_from_hyperboloid(const ConstVec& x, const ConstVec& X, Representation rep) {
  switch (rep) {
    case Representation::Hyperboloid:
      return X;
    case Representation::PoincareBall: {
      const Index n = x.size() - 1;
      const double d = 1.0 + x(n);
      return X.head(n) / d - x.head(n) * (X(n) / (d * d));
    }
    case Representation::PoincareHalfSpace: {
      const Index n = x.size() - 1;
      const double w = half_space_denominator(x);
      const double dw = X(n) - X(n - 1);
      VectorXd h(n);
      h.head(n - 1) = X.head(n - 1) / w - x.head(n - 1) * (dw / (w * w));
      h(n - 1) = -dw / (w * w);
      return h;
    }
    case Representation::Array:
      break;
  }
  throw GeometryError(GeometryErrorKind::InvalidArgument, "not a hyperbolic representation");
}

}  // namespace

VectorXd hyperbolic_convert(const ConstVec& p, Representation from, Representation to) {
  if (from == to) return p;
  return from_hyperboloid(to_hyperboloid(p, from), to);
}

VectorXd hyperbolic_convert_tangent(const ConstVec& p, const ConstVec& X, Representation from,
                                    Representation to) {
  if (from == to) return X;
  const VectorXd x = to_hyperboloid(p, from);
  return push_from_hyperboloid(x, push_to_hyperboloid(p, X, from), to);
}

// ---------------------------------------------------------------------------
// Hyperboloid closed forms

VectorXd Hyperbolic::hyperboloid_exp(const ConstVec& p, const ConstVec& X) {
  const double t = std::sqrt(std::max(0.0, minkowski_inner(X, X)));
  return std::cosh(t) * p + numeric::sinhc(t) * X;
}

double Hyperbolic::hyperboloid_distance(const ConstVec& p, const ConstVec& q) {
  // <q - p, q - p>_L = 4 sinh^2(d / 2); stable for nearby points, unlike
  // arccosh(-<p, q>_L).
  const VectorXd diff = q - p;
  const double chord = std::sqrt(std::max(0.0, minkowski_inner(diff, diff)));
  return 2.0 * std::asinh(0.5 * chord);
}

VectorXd Hyperbolic::hyperboloid_log(const ConstVec& p, const ConstVec& q) {
  const double d = hyperboloid_distance(p, q);
  const VectorXd v = q + minkowski_inner(p, q) * p;
  return numeric::x_over_sinh(d) * v;
}

VectorXd Hyperbolic::hyperboloid_transport(const ConstVec& p, const ConstVec& q, const ConstVec& X) {
  const double f = minkowski_inner(q, X) / (1.0 - minkowski_inner(p, q));
  return X + f * (p + q);
}

// ---------------------------------------------------------------------------

Hyperbolic::Hyperbolic(Index n, Representation representation) : n_(n), rep_(representation) {
  if (n < 1) throw GeometryError(GeometryErrorKind::InvalidArgument, "Hyperbolic needs n >= 1");
  if (representation == Representation::Array)
    throw GeometryError(GeometryErrorKind::InvalidArgument,
                        "Hyperbolic needs an explicit point representation");
}

ManifoldDescriptor Hyperbolic::descriptor() const {
  return ManifoldDescriptor(ManifoldKind::Hyperbolic, {n_}, MetricTag::Minkowski, rep_);
}

bool Hyperbolic::is_point(ConstPointRef p, double tol) const {
  if (p.size() != array_size() || !p.allFinite()) return false;
  switch (rep_) {
    case Representation::Hyperboloid:
      return p(n_) > 0.0 && std::abs(minkowski_inner(p, p) + 1.0) <= tol;
    case Representation::PoincareBall:
      return p.squaredNorm() < 1.0;
    case Representation::PoincareHalfSpace:
      return p(n_ - 1) > 0.0;
    case Representation::Array:
      break;
  }
  return false;
}

bool Hyperbolic::is_tangent(ConstPointRef p, ConstPointRef X, double tol) const {
  if (X.size() != array_size() || !X.allFinite()) return false;
  if (rep_ == Representation::Hyperboloid) return std::abs(minkowski_inner(p, X)) <= tol;
  return true;
}

void Hyperbolic::exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
  if (rep_ == Representation::Hyperboloid) {
    q = hyperboloid_exp(p, X);
    return;
  }
  const VectorXd x = to_hyperboloid(p, rep_);
  q = from_hyperboloid(hyperboloid_exp(x, push_to_hyperboloid(p, X, rep_)), rep_);
}

void Hyperbolic::log_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
  if (rep_ == Representation::Hyperboloid) {
    X = hyperboloid_log(p, q);
    return;
  }
  const VectorXd x = to_hyperboloid(p, rep_);
  const VectorXd y = to_hyperboloid(q, rep_);
  X = push_from_hyperboloid(x, hyperboloid_log(x, y), rep_);
}

double Hyperbolic::distance(ConstPointRef p, ConstPointRef q) const {
  if (rep_ == Representation::Hyperboloid) return hyperboloid_distance(p, q);
  return hyperboloid_distance(to_hyperboloid(p, rep_), to_hyperboloid(q, rep_));
}

double Hyperbolic::inner(ConstPointRef p, ConstPointRef X, ConstPointRef Y) const {
  switch (rep_) {
    case Representation::Hyperboloid:
      return minkowski_inner(X, Y);
    case Representation::PoincareBall: {
      const double lambda = 2.0 / (1.0 - p.squaredNorm());
      return lambda * lambda * X.dot(Y);
    }
    case Representation::PoincareHalfSpace: {
      const double v = p(n_ - 1);
      return X.dot(Y) / (v * v);
    }
    case Representation::Array:
      break;
  }
  return 0.0;
}

void Hyperbolic::parallel_transport_to(PointRef Y, ConstPointRef p, ConstPointRef q,
                                       ConstPointRef X) const {
  if (rep_ == Representation::Hyperboloid) {
    Y = hyperboloid_transport(p, q, X);
    return;
  }
  const VectorXd x = to_hyperboloid(p, rep_);
  const VectorXd y = to_hyperboloid(q, rep_);
  Y = push_from_hyperboloid(y, hyperboloid_transport(x, y, push_to_hyperboloid(p, X, rep_)), rep_);
}

void Hyperbolic::project_point_to(PointRef q, ConstPointRef a) const {
  require_size(a, array_size(), "ambient array has the wrong length");
  switch (rep_) {
    case Representation::Hyperboloid: {
      const double spatial = a.head(n_).squaredNorm();
      q.head(n_) = a.head(n_);
      q(n_) = std::sqrt(1.0 + spatial);
      return;
    }
    case Representation::PoincareBall:
      if (!(a.squaredNorm() < 1.0))
        throw GeometryError(GeometryErrorKind::ProjectionUndefined, "outside the Poincare ball");
      q = a;
      return;
    case Representation::PoincareHalfSpace:
      if (!(a(n_ - 1) > 0.0))
        throw GeometryError(GeometryErrorKind::ProjectionUndefined, "outside the half space");
      q = a;
      return;
    case Representation::Array:
      break;
  }
}

void Hyperbolic::project_tangent_to(PointRef Y, ConstPointRef p, ConstPointRef a) const {
  if (rep_ == Representation::Hyperboloid) {
    const double c = minkowski_inner(p, a);
    Y = a + c * p;
    return;
  }
  Y = a;
}

std::vector<Hyperbolic::Tangent> Hyperbolic::basis_vectors(ConstPointRef p) const {
  const VectorXd x = to_hyperboloid(p, rep_);
  std::vector<Tangent> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (Index i = 0; i < n_; ++i) {
    VectorXd v = VectorXd::Zero(n_ + 1);
    v(i) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      v += minkowski_inner(x, v) * x;
      for (const auto& b : out) v -= minkowski_inner(b, v) * b;
    }
    v /= std::sqrt(minkowski_inner(v, v));
    out.push_back(v);
  }
  if (rep_ != Representation::Hyperboloid)
    for (auto& b : out) b = push_from_hyperboloid(x, b, rep_);
  return out;
}

}  // namespace manifolds
