#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cesaro/rational.hpp"

namespace cesaro {

/// A vector of V = Q^d with exact coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dimension) : coords_(dimension) {}
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point constant(std::size_t dimension, const Rational& value) {
    return Point(std::vector<Rational>(dimension, value));
  }

  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;

  /// max_i |x_i| (unweighted).
  Rational sup_norm() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const Rational& scalar);
  Point& operator/=(const Rational& scalar);

  /// this += scalar * other, without a temporary.
  Point& add_scaled(const Rational& scalar, const Point& other);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Point operator*(const Rational& s, Point a) { return a *= s; }
  friend Point operator*(Point a, const Rational& s) { return a *= s; }
  friend Point operator/(Point a, const Rational& s) { return a /= s; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  /// Lexicographic; used for deterministic ordering of point sets.
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

  /// "(p1, p2, ...)" with exact fraction strings.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// The first n terms theta_1..theta_n of a sequence in V^N.
using SeqPrefix = std::vector<Point>;

/// Throws PreconditionError unless every point of the prefix has the given dimension.
void require_dimension(std::span<const Point> points, std::size_t dimension);

}  // namespace cesaro
