#include "manifolds/core/errors.hpp"

namespace manifolds {

const char* to_string(GeometryErrorKind kind) {
  switch (kind) {
    case GeometryErrorKind::LogUndefined:
      return "LogUndefined";
    case GeometryErrorKind::TransportUndefined:
      return "TransportUndefined";
    case GeometryErrorKind::InverseRetractionUndefined:
      return "InverseRetractionUndefined";
    case GeometryErrorKind::ProjectionUndefined:
      return "ProjectionUndefined";
    case GeometryErrorKind::MethodUnsupported:
      return "MethodUnsupported";
    case GeometryErrorKind::DecompositionFailed:
      return "DecompositionFailed";
    case GeometryErrorKind::MaxIterationsExceeded:
      return "MaxIterationsExceeded";
    case GeometryErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case GeometryErrorKind::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_message(GeometryErrorKind kind, const std::string& what,
                           std::optional<std::size_t> component) {
  std::string msg = std::string(to_string(kind)) + ": " + what;
  if (component) msg += " (component " + std::to_string(*component) + ")";
  return msg;
}

}  // namespace

GeometryError::GeometryError(GeometryErrorKind kind, const std::string& what,
                             std::optional<std::size_t> component)
    : std::runtime_error(format_message(kind, what, component)),
      kind_(kind),
      component_(component),
      message_(what) {}

GeometryError GeometryError::with_component(std::size_t index) const {
  return GeometryError(kind_, message_, index);
}

}  // namespace manifolds
