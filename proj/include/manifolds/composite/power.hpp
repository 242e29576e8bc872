#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "manifolds/core/manifold.hpp"

namespace manifolds {

/// Grid-indexed power M^{g_1 x ... x g_k} of a base manifold whose points are
/// dense Eigen arrays.
///
/// A power point is one contiguous column-major buffer: column c holds the base
/// element of grid cell c (flattened column-major), so the base element shape
/// varies fastest and the grid index (first grid axis fastest) slowest. An
/// SPD(3)^{128x128} point is a single 9 x 16384 matrix.
///
/// Componentwise operations stop at the first failing component and rethrow
/// with its index attached; the output buffer is then partially written and
/// must be treated as invalid.
template <Manifold Base>
  requires DenseArray<typename Base::Point>
class PowerManifold {
 public:
  using BasePoint = typename Base::Point;
  using BaseTangent = typename Base::Tangent;
  using Point = Eigen::Matrix<double, BasePoint::SizeAtCompileTime, Eigen::Dynamic>;
  using Tangent = Point;
  using PointRef = Eigen::Ref<Point>;
  using ConstPointRef = const Eigen::Ref<const Point>&;

  PowerManifold(Base base, std::vector<Index> grid) : base_(std::move(base)), grid_(std::move(grid)) {
    if (grid_.empty() || std::any_of(grid_.begin(), grid_.end(), [](Index g) { return g < 1; }))
      throw GeometryError(GeometryErrorKind::InvalidArgument, "power grid entries must be positive");
    cells_ = std::accumulate(grid_.begin(), grid_.end(), Index{1}, std::multiplies<>());
    const BasePoint probe = base_.allocate_point();
    base_rows_ = probe.rows();
    base_cols_ = probe.cols();
  }

  const Base& base() const { return base_; }
  const std::vector<Index>& grid() const { return grid_; }
  Index cells() const { return cells_; }
  Index component_size() const { return base_rows_ * base_cols_; }

  ManifoldDescriptor descriptor() const {
    return ManifoldDescriptor(ManifoldKind::Power, grid_, MetricTag::ProductMetric,
                              Representation::Array, {base_.descriptor()});
  }
  Index manifold_dimension() const { return cells_ * base_.manifold_dimension(); }
  EmbeddingInfo embedding() const {
    EmbeddingInfo info = base_.embedding();
    info.ambient_shape.insert(info.ambient_shape.end(), grid_.begin(), grid_.end());
    return info;
  }
  double injectivity_radius() const { return base_.injectivity_radius(); }

  Point allocate_point() const { return Point::Zero(component_size(), cells_); }
  Tangent allocate_tangent() const { return Tangent::Zero(component_size(), cells_); }

  /// Writable view of component `cell`.
  Eigen::Map<BasePoint> mutable_component(PointRef a, Index cell) const {
    return Eigen::Map<BasePoint>(a.col(cell).data(), base_rows_, base_cols_);
  }
  Eigen::Map<const BasePoint> component(ConstPointRef a, Index cell) const {
    return Eigen::Map<const BasePoint>(a.col(cell).data(), base_rows_, base_cols_);
  }

  /// Converts a multi-index (first axis fastest) into a cell index.
  Index cell_index(const std::vector<Index>& multi) const {
    Index cell = 0;
    Index stride = 1;
    for (std::size_t k = 0; k < grid_.size(); ++k) {
      cell += multi[k] * stride;
      stride *= grid_[k];
    }
    return cell;
  }

  bool is_point(ConstPointRef p, double tol) const {
    if (!has_shape(p)) return false;
    for (Index c = 0; c < cells_; ++c)
      if (!base_.is_point(component(p, c), tol)) return false;
    return true;
  }

  bool is_tangent(ConstPointRef p, ConstPointRef X, double tol) const {
    if (!has_shape(p) || !has_shape(X)) return false;
    for (Index c = 0; c < cells_; ++c)
      if (!base_.is_tangent(component(p, c), component(X, c), tol)) return false;
    return true;
  }

  void exp_to(PointRef q, ConstPointRef p, ConstPointRef X) const {
    for_each_cell([&](Index c) { base_.exp_to(mutable_component(q, c), component(p, c), component(X, c)); });
  }

  void log_to(PointRef X, ConstPointRef p, ConstPointRef q) const {
    for_each_cell([&](Index c) { base_.log_to(mutable_component(X, c), component(p, c), component(q, c)); });
  }

  /// l2 combination of component distances.
  double distance(ConstPointRef p, ConstPointRef q) const {
    double sum = 0.0;
    for_each_cell([&](Index c) {
      const double d = base_.distance(component(p, c), component(q, c));
      sum += d * d;
    });
    return std::sqrt(sum);
  }

  double inner(ConstPointRef p, ConstPointRef X, ConstPointRef Y) const {
    double sum = 0.0;
    for_each_cell([&](Index c) {
      sum += base_.inner(component(p, c), component(X, c), component(Y, c));
    });
    return sum;
  }

  void parallel_transport_to(PointRef Y, ConstPointRef p, ConstPointRef q, ConstPointRef X) const {
    for_each_cell([&](Index c) {
      base_.parallel_transport_to(mutable_component(Y, c), component(p, c), component(q, c), component(X, c));
    });
  }

  void projection_retract_to(PointRef q, ConstPointRef p, ConstPointRef X) const
    requires HasProjectionRetraction<Base>
  {
    for_each_cell([&](Index c) {
      base_.projection_retract_to(mutable_component(q, c), component(p, c), component(X, c));
    });
  }

  void projection_inverse_retract_to(PointRef X, ConstPointRef p, ConstPointRef q) const
    requires HasProjectionRetraction<Base>
  {
    for_each_cell([&](Index c) {
      base_.projection_inverse_retract_to(mutable_component(X, c), component(p, c), component(q, c));
    });
  }

  void project_point_to(PointRef q, ConstPointRef a) const {
    require_shape(a);
    for_each_cell([&](Index c) { base_.project_point_to(mutable_component(q, c), component(a, c)); });
  }

  void project_tangent_to(PointRef Y, ConstPointRef p, ConstPointRef a) const {
    require_shape(a);
    for_each_cell([&](Index c) {
      base_.project_tangent_to(mutable_component(Y, c), component(p, c), component(a, c));
    });
  }

  /// Base bases of each cell in turn: vector index = cell * dim(base) + j.
  std::vector<Tangent> basis_vectors(ConstPointRef p) const {
    std::vector<Tangent> out;
    out.reserve(static_cast<std::size_t>(manifold_dimension()));
    for (Index c = 0; c < cells_; ++c) {
      const BasePoint pc = component(p, c);
      for (const auto& b : base_.basis_vectors(pc)) {
        Tangent v = allocate_tangent();
        mutable_component(v, c) = b;
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  template <class Rng>
  Point random_point(Rng& rng) const {
    Point p = allocate_point();
    for (Index c = 0; c < cells_; ++c) mutable_component(p, c) = base_.random_point(rng);
    return p;
  }

  template <class Rng>
  Tangent random_tangent(ConstPointRef p, Rng& rng) const {
    Tangent X = allocate_tangent();
    for (Index c = 0; c < cells_; ++c) {
      const BasePoint pc = component(p, c);
      mutable_component(X, c) = base_.random_tangent(pc, rng);
    }
    return X;
  }

 private:
  bool has_shape(ConstPointRef a) const {
    return a.rows() == component_size() && a.cols() == cells_;
  }

  void require_shape(ConstPointRef a) const {
    if (!has_shape(a))
      throw GeometryError(GeometryErrorKind::DimensionMismatch, "power array has the wrong shape");
  }

  template <class F>
  void for_each_cell(F&& f) const {
    for (Index c = 0; c < cells_; ++c) {
      try {
        f(c);
      } catch (const GeometryError& e) {
        throw e.with_component(static_cast<std::size_t>(c));
      }
    }
  }

  Base base_;
  std::vector<Index> grid_;
  Index cells_ = 0;
  Index base_rows_ = 0;
  Index base_cols_ = 0;
};

}  // namespace manifolds
