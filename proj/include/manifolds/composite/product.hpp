#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Cartesian product M_1 x ... x M_k. Points and tangents are heterogeneous
/// tuples of factor points/tangents; the metric is the sum of factor metrics.
/// Errors from a factor are rethrown with the factor index attached.
template <Manifold... Factors>
  requires(sizeof...(Factors) >= 1)
class ProductManifold {
 public:
  using Point = std::tuple<typename Factors::Point...>;
  using Tangent = std::tuple<typename Factors::Tangent...>;
  static constexpr std::size_t kFactors = sizeof...(Factors);

  explicit ProductManifold(Factors... factors) : factors_(std::move(factors)...) {}

  template <std::size_t I>
  const auto& factor() const {
    return std::get<I>(factors_);
  }

  ManifoldDescriptor descriptor() const {
    std::vector<ManifoldDescriptor> parts;
    each([&](const auto& f, auto) { parts.push_back(f.descriptor()); });
    return ManifoldDescriptor(ManifoldKind::Product, {}, MetricTag::ProductMetric,
                              Representation::Array, std::move(parts));
  }

  Index manifold_dimension() const {
    Index total = 0;
    each([&](const auto& f, auto) { total += f.manifold_dimension(); });
    return total;
  }

  /// Concatenated ambient arrays; isometric iff every factor is.
  EmbeddingInfo embedding() const {
    Index total = 0;
    bool isometric = true;
    each([&](const auto& f, auto) {
      const EmbeddingInfo e = f.embedding();
      Index size = 1;
      for (Index s : e.ambient_shape) size *= s;
      total += size;
      isometric = isometric && e.isometric;
    });
    return {{total}, isometric};
  }

  double injectivity_radius() const {
    double r = std::numeric_limits<double>::infinity();
    each([&](const auto& f, auto) { r = std::min(r, f.injectivity_radius()); });
    return r;
  }

  Point allocate_point() const {
    return map([](const auto& f, auto) { return f.allocate_point(); });
  }
  Tangent allocate_tangent() const {
    return map([](const auto& f, auto) { return f.allocate_tangent(); });
  }

  bool is_point(const Point& p, double tol) const {
    bool ok = true;
    each([&](const auto& f, auto i) { ok = ok && f.is_point(std::get<decltype(i)::value>(p), tol); });
    return ok;
  }

  bool is_tangent(const Point& p, const Tangent& X, double tol) const {
    bool ok = true;
    each([&](const auto& f, auto i) {
      ok = ok && f.is_tangent(std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(X), tol);
    });
    return ok;
  }

  void exp_to(Point& q, const Point& p, const Tangent& X) const {
    each_checked([&](const auto& f, auto i) {
      f.exp_to(std::get<decltype(i)::value>(q), std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(X));
    });
  }

  void log_to(Tangent& X, const Point& p, const Point& q) const {
    each_checked([&](const auto& f, auto i) {
      f.log_to(std::get<decltype(i)::value>(X), std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(q));
    });
  }

  double distance(const Point& p, const Point& q) const {
    double sum = 0.0;
    each_checked([&](const auto& f, auto i) {
      const double d = f.distance(std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(q));
      sum += d * d;
    });
    return std::sqrt(sum);
  }

  double inner(const Point& p, const Tangent& X, const Tangent& Y) const {
    double sum = 0.0;
    each_checked([&](const auto& f, auto i) {
      sum += f.inner(std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(X), std::get<decltype(i)::value>(Y));
    });
    return sum;
  }

  void parallel_transport_to(Tangent& Y, const Point& p, const Point& q, const Tangent& X) const {
    each_checked([&](const auto& f, auto i) {
      f.parallel_transport_to(std::get<decltype(i)::value>(Y), std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(q), std::get<decltype(i)::value>(X));
    });
  }

  void projection_retract_to(Point& q, const Point& p, const Tangent& X) const
    requires(HasProjectionRetraction<Factors> && ...)
  {
    each_checked([&](const auto& f, auto i) {
      f.projection_retract_to(std::get<decltype(i)::value>(q), std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(X));
    });
  }

  void projection_inverse_retract_to(Tangent& X, const Point& p, const Point& q) const
    requires(HasProjectionRetraction<Factors> && ...)
  {
    each_checked([&](const auto& f, auto i) {
      f.projection_inverse_retract_to(std::get<decltype(i)::value>(X), std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(q));
    });
  }

  void project_point_to(Point& q, const Point& a) const {
    each_checked([&](const auto& f, auto i) { f.project_point_to(std::get<decltype(i)::value>(q), std::get<decltype(i)::value>(a)); });
  }

  void project_tangent_to(Tangent& Y, const Point& p, const Tangent& a) const {
    each_checked([&](const auto& f, auto i) {
      f.project_tangent_to(std::get<decltype(i)::value>(Y), std::get<decltype(i)::value>(p), std::get<decltype(i)::value>(a));
    });
  }

  /// Factor bases in factor order, each embedded with zeros elsewhere.
  std::vector<Tangent> basis_vectors(const Point& p) const {
    std::vector<Tangent> out;
    each([&](const auto& f, auto i) {
      for (auto& b : f.basis_vectors(std::get<decltype(i)::value>(p))) {
        Tangent v = allocate_tangent();
        std::get<decltype(i)::value>(v) = std::move(b);
        out.push_back(std::move(v));
      }
    });
    return out;
  }

  template <class Rng>
  Point random_point(Rng& rng) const {
    Point p = allocate_point();
    each([&](const auto& f, auto i) { std::get<decltype(i)::value>(p) = f.random_point(rng); });
    return p;
  }

  template <class Rng>
  Tangent random_tangent(const Point& p, Rng& rng) const {
    Tangent X = allocate_tangent();
    each([&](const auto& f, auto i) { std::get<decltype(i)::value>(X) = f.random_tangent(std::get<decltype(i)::value>(p), rng); });
    return X;
  }

 private:
  // Calls fn(factor, integral_constant<I>) for each factor in order.
  template <class Fn>
  void each(Fn&& fn) const {
    [&]<std::size_t... I>(std::index_sequence<I...>) {
      (fn(std::get<I>(factors_), std::integral_constant<std::size_t, I>{}), ...);
    }(std::index_sequence_for<Factors...>{});
  }

  template <class Fn>
  void each_checked(Fn&& fn) const {
    each([&](const auto& f, auto i) {
      try {
        fn(f, i);
      } catch (const GeometryError& e) {
        throw e.with_component(i());
      }
    });
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
      return std::make_tuple(fn(std::get<I>(factors_), std::integral_constant<std::size_t, I>{})...);
    }(std::index_sequence_for<Factors...>{});
  }

  std::tuple<Factors...> factors_;
};

}  // namespace manifolds
