#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace manifolds {

/// Reasons a geometric operation has no well-defined result.
enum class GeometryErrorKind {
  LogUndefined,
  TransportUndefined,
  InverseRetractionUndefined,
  ProjectionUndefined,
  MethodUnsupported,
  DecompositionFailed,
  MaxIterationsExceeded,
  DimensionMismatch,
  InvalidArgument,
};

const char* to_string(GeometryErrorKind kind);

/// Recoverable failure of a geometric computation (antipodal log, unsupported
/// retraction, ...). Composite manifolds attach the index of the failing
/// component.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what,
                std::optional<std::size_t> component = std::nullopt);

  GeometryErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> component() const noexcept { return component_; }

  /// Same error, tagged with a component index (outermost composite wins).
  GeometryError with_component(std::size_t index) const;

 private:
  GeometryErrorKind kind_;
  std::optional<std::size_t> component_;
  std::string message_;
};

/// Raised only by ValidationManifold when an input or output violates the
/// manifold constraints.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace manifolds
