#pragma once

#include <type_traits>
#include <utility>

#include "manifolds/core/manifold.hpp"
#include "manifolds/elementary/euclidean.hpp"
#include "manifolds/matrix/rotations.hpp"

namespace manifolds {

enum class GroupOperation { Addition, Multiplication };
enum class Side { Left, Right };

namespace detail {

template <class M>
struct GroupTraits : std::false_type {};

template <int R, int C>
struct GroupTraits<Euclidean<R, C>> : std::true_type {
  static constexpr GroupOperation kOperation = GroupOperation::Addition;
};

template <int N>
struct GroupTraits<Rotations<N>> : std::true_type {
  static constexpr GroupOperation kOperation = GroupOperation::Multiplication;
};

}  // namespace detail

/// Base manifolds for which a group structure is provided: Euclidean under
/// addition and Rotations under matrix multiplication.
template <class M>
concept GroupBase = Manifold<M> && detail::GroupTraits<M>::value;

/// A manifold equipped with a group operation. All manifold operations are
/// inherited from the base; the group layer adds identity, composition,
/// inversion, translations and the group exponential/logarithm. Lie algebra
/// elements are tangent arrays at the identity.
template <GroupBase M>
class GroupManifold : public M {
 public:
  using Point = typename M::Point;
  using Tangent = typename M::Tangent;
  static constexpr GroupOperation kOperation = detail::GroupTraits<M>::kOperation;

  GroupManifold(M base, GroupOperation operation) : M(std::move(base)) {
    if (operation != kOperation)
      throw GeometryError(GeometryErrorKind::InvalidArgument,
                          "group operation not available on " + to_string(M::descriptor()));
  }

  const M& base() const { return *this; }
  GroupOperation operation() const { return kOperation; }

  Point identity_element() const {
    Point e = M::allocate_point();
    if constexpr (kOperation == GroupOperation::Multiplication) e.setIdentity();
    return e;
  }

  Point compose(const Point& p, const Point& q) const {
    if constexpr (kOperation == GroupOperation::Addition)
      return p + q;
    else
      return p * q;
  }

  Point inverse(const Point& p) const {
    if constexpr (kOperation == GroupOperation::Addition)
      return -p;
    else
      return p.transpose();
  }

  /// Left: g o p. Right: p o g.
  Point translate(const Point& g, const Point& p, Side side = Side::Left) const {
    return side == Side::Left ? compose(g, p) : compose(p, g);
  }

  /// Undoes translate: Left: g^-1 o p. Right: p o g^-1.
  Point inverse_translate(const Point& g, const Point& p, Side side = Side::Left) const {
    return side == Side::Left ? compose(inverse(g), p) : compose(p, inverse(g));
  }

  /// Group exponential of a Lie algebra element.
  Point group_exp(const Tangent& X) const {
    if constexpr (kOperation == GroupOperation::Addition)
      return X;
    else
      return M::skew_exp(M::skew_part(X));
  }

  /// Group logarithm; LogUndefined for rotations by angle pi.
  Tangent group_log(const Point& p) const {
    if constexpr (kOperation == GroupOperation::Addition)
      return p;
    else
      return M::rotation_log(p);
  }
};

}  // namespace manifolds
