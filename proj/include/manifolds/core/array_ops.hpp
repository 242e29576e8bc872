#pragma once

#include <algorithm>
#include <cmath>
#include <cstring>
#include <tuple>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

// Linear-space arithmetic on point/tangent storage: dense Eigen arrays and
// (possibly nested) tuples of them. Used by the generic algorithms, which
// must not care whether a manifold stores a matrix or a product tuple.

namespace manifolds {

template <class T>
concept DenseArray = std::is_base_of_v<Eigen::DenseBase<T>, T>;

template <class T>
struct is_tuple : std::false_type {};
template <class... Ts>
struct is_tuple<std::tuple<Ts...>> : std::true_type {};

template <DenseArray T>
void axpy(double a, const T& x, T& y) {
  y += a * x;
}

template <class... Ts>
void axpy(double a, const std::tuple<Ts...>& x, std::tuple<Ts...>& y) {
  [&]<std::size_t... I>(std::index_sequence<I...>) {
    (axpy(a, std::get<I>(x), std::get<I>(y)), ...);
  }(std::index_sequence_for<Ts...>{});
}

template <DenseArray T>
void scale_in_place(T& x, double a) {
  x *= a;
}

template <class... Ts>
void scale_in_place(std::tuple<Ts...>& x, double a) {
  std::apply([a](auto&... parts) { (scale_in_place(parts, a), ...); }, x);
}

template <class T>
T scaled(const T& x, double a) {
  T out = x;
  scale_in_place(out, a);
  return out;
}

template <DenseArray T>
void set_zero(T& x) {
  x.setZero();
}

template <class... Ts>
void set_zero(std::tuple<Ts...>& x) {
  std::apply([](auto&... parts) { (set_zero(parts), ...); }, x);
}

template <DenseArray T>
double ambient_squared_norm(const T& x) {
  return x.squaredNorm();
}

template <class... Ts>
double ambient_squared_norm(const std::tuple<Ts...>& x) {
  return std::apply([](const auto&... parts) { return (0.0 + ... + ambient_squared_norm(parts)); }, x);
}

template <class T>
double ambient_norm(const T& x) {
  return std::sqrt(ambient_squared_norm(x));
}

template <DenseArray T>
double ambient_squared_distance(const T& a, const T& b) {
  return (a - b).squaredNorm();
}

template <class... Ts>
double ambient_squared_distance(const std::tuple<Ts...>& a, const std::tuple<Ts...>& b) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return (0.0 + ... + ambient_squared_distance(std::get<I>(a), std::get<I>(b)));
  }(std::index_sequence_for<Ts...>{});
}

/// Frobenius distance between two arrays of identical layout.
template <class T>
double ambient_distance(const T& a, const T& b) {
  return std::sqrt(ambient_squared_distance(a, b));
}

/// Relative closeness in the ambient array norm.
template <class T>
bool is_approx(const T& a, const T& b, double tol) {
  return ambient_distance(a, b) <= tol * std::max(1.0, ambient_norm(a));
}

/// Bitwise equality of every stored coefficient.
template <DenseArray T>
bool bit_equal(const T& a, const T& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (std::memcmp(&a(i, j), &b(i, j), sizeof(double)) != 0) return false;
  return true;
}

template <class... Ts>
bool bit_equal(const std::tuple<Ts...>& a, const std::tuple<Ts...>& b) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return (true && ... && bit_equal(std::get<I>(a), std::get<I>(b)));
  }(std::index_sequence_for<Ts...>{});
}

}  // namespace manifolds
