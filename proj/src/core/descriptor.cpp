#include "manifolds/core/descriptor.hpp"

#include <numeric>
#include <utility>

#include "manifolds/core/errors.hpp"

namespace manifolds {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw GeometryError(GeometryErrorKind::InvalidArgument, what);
}

void check_descriptor(const ManifoldDescriptor& d) {
  const auto& shape = d.shape();
  for (Index s : shape) require(s >= 1, "descriptor shape entries must be positive");
  switch (d.kind()) {
    case ManifoldKind::Euclidean:
      require(shape.size() == 1 || shape.size() == 2, "Euclidean shape is (n) or (n, m)");
      break;
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperbolic:
    case ManifoldKind::SymmetricPositiveDefinite:
      require(shape.size() == 1, "shape must be (n)");
      break;
    case ManifoldKind::Rotations:
      require(shape.size() == 1 && shape[0] >= 2, "Rotations requires n >= 2");
      break;
    case ManifoldKind::Power:
      require(!shape.empty(), "Power needs a non-empty grid");
      require(d.factors().size() == 1, "Power has exactly one base");
      break;
    case ManifoldKind::Product:
      require(!d.factors().empty(), "Product needs at least one factor");
      break;
  }
  if (d.kind() == ManifoldKind::Hyperbolic) {
    require(d.representation() != Representation::Array,
            "Hyperbolic needs an explicit point representation");
  } else {
    require(d.representation() == Representation::Array,
            "only Hyperbolic carries a point representation");
  }
}

}  // namespace

ManifoldDescriptor::ManifoldDescriptor(ManifoldKind kind, std::vector<Index> shape,
                                       MetricTag metric, Representation representation,
                                       std::vector<ManifoldDescriptor> factors)
    : kind_(kind),
      shape_(std::move(shape)),
      metric_(metric),
      representation_(representation),
      factors_(std::move(factors)) {
  check_descriptor(*this);
}

MetricTag default_metric(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::Sphere:
    case ManifoldKind::Rotations:
      return MetricTag::Euclidean;
    case ManifoldKind::Hyperbolic:
      return MetricTag::Minkowski;
    case ManifoldKind::SymmetricPositiveDefinite:
      return MetricTag::LinearAffine;
    case ManifoldKind::Power:
    case ManifoldKind::Product:
      return MetricTag::ProductMetric;
  }
  return MetricTag::Euclidean;
}

Index manifold_dimension(const ManifoldDescriptor& d) {
  const auto& s = d.shape();
  switch (d.kind()) {
    case ManifoldKind::Euclidean:
      return std::accumulate(s.begin(), s.end(), Index{1}, std::multiplies<>());
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperbolic:
      return s[0];
    case ManifoldKind::SymmetricPositiveDefinite:
      return s[0] * (s[0] + 1) / 2;
    case ManifoldKind::Rotations:
      return s[0] * (s[0] - 1) / 2;
    case ManifoldKind::Power: {
      const Index cells = std::accumulate(s.begin(), s.end(), Index{1}, std::multiplies<>());
      return cells * manifold_dimension(d.factors().front());
    }
    case ManifoldKind::Product: {
      Index total = 0;
      for (const auto& f : d.factors()) total += manifold_dimension(f);
      return total;
    }
  }
  return 0;
}

std::string to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Euclidean:
      return "Euclidean";
    case ManifoldKind::Sphere:
      return "Sphere";
    case ManifoldKind::Hyperbolic:
      return "Hyperbolic";
    case ManifoldKind::SymmetricPositiveDefinite:
      return "SymmetricPositiveDefinite";
    case ManifoldKind::Rotations:
      return "Rotations";
    case ManifoldKind::Power:
      return "Power";
    case ManifoldKind::Product:
      return "Product";
  }
  return "Unknown";
}

std::string to_string(Representation representation) {
  switch (representation) {
    case Representation::Array:
      return "Array";
    case Representation::Hyperboloid:
      return "Hyperboloid";
    case Representation::PoincareBall:
      return "PoincareBall";
    case Representation::PoincareHalfSpace:
      return "PoincareHalfSpace";
  }
  return "Unknown";
}

std::string to_string(const ManifoldDescriptor& d) {
  std::string out = to_string(d.kind()) + "(";
  for (std::size_t i = 0; i < d.shape().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.shape()[i]);
  }
  if (d.kind() == ManifoldKind::Hyperbolic) out += ";" + to_string(d.representation());
  for (std::size_t i = 0; i < d.factors().size(); ++i)
    out += (i == 0 && d.shape().empty() ? "" : ";") + to_string(d.factors()[i]);
  return out + ")";
}

}  // namespace manifolds
