#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace manifolds {

using Index = std::int64_t;

enum class ManifoldKind {
  Euclidean,
  Sphere,
  Hyperbolic,
  SymmetricPositiveDefinite,
  Rotations,
  Power,
  Product,
};

enum class MetricTag {
  Euclidean,       // flat ambient inner product (Euclidean, Sphere, Rotations)
  Minkowski,       // hyperbolic space, any representation
  LinearAffine,    // tr(p^-1 X p^-1 Y) on SPD matrices
  ProductMetric,   // sum of factor/component metrics
};

enum class Representation {
  Array,  // plain dense array, the only convention for non-hyperbolic kinds
  Hyperboloid,
  PoincareBall,
  PoincareHalfSpace,
};

/// Immutable value identifying a manifold. Two descriptors comparing equal
/// describe interchangeable manifolds.
///
/// shape holds the family parameters: (n) for Sphere/Hyperbolic/SPD/Rotations,
/// (n) or (n, m) for Euclidean, the grid for Power. Power and Product carry
/// their base/factor descriptors in `factors`.
class ManifoldDescriptor {
 public:
  ManifoldDescriptor(ManifoldKind kind, std::vector<Index> shape, MetricTag metric,
                     Representation representation = Representation::Array,
                     std::vector<ManifoldDescriptor> factors = {});

  ManifoldKind kind() const noexcept { return kind_; }
  const std::vector<Index>& shape() const noexcept { return shape_; }
  MetricTag metric() const noexcept { return metric_; }
  Representation representation() const noexcept { return representation_; }
  const std::vector<ManifoldDescriptor>& factors() const noexcept { return factors_; }

  bool operator==(const ManifoldDescriptor&) const = default;

 private:
  ManifoldKind kind_;
  std::vector<Index> shape_;
  MetricTag metric_;
  Representation representation_;
  std::vector<ManifoldDescriptor> factors_;
};

/// Default metric of a manifold family.
MetricTag default_metric(ManifoldKind kind);

/// Intrinsic dimension; a pure function of (kind, shape, factors).
Index manifold_dimension(const ManifoldDescriptor& descriptor);

std::string to_string(ManifoldKind kind);
std::string to_string(Representation representation);
std::string to_string(const ManifoldDescriptor& descriptor);

}  // namespace manifolds
