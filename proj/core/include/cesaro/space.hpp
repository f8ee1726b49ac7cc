#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cesaro/point.hpp"
#include "cesaro/rational.hpp"

namespace cesaro {

/// V = Q^d with the seminorm family ||x||_i = w_i |x_i|, i = 1..d. Seminorms
/// with index > d are identically zero, so the metric
///   d(x, y) = sum_i 2^-i ||x - y||_i / (1 + ||x - y||_i)
/// is a finite exact sum.
class Space {
 public:
  /// Unit weights.
  explicit Space(std::size_t dimension);
  explicit Space(std::vector<Rational> seminorm_weights);

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }

  /// ||x||_rho for 1 <= rho <= d.
  Rational seminorm(std::size_t rho, const Point& x) const;

  Rational metric(const Point& x, const Point& y) const;
  Rational norm_to_zero(const Point& x) const;

  /// Number of seminorm indices rho <= min(N, d), i.e. the ones that can be nonzero.
  std::size_t active(std::size_t important_count) const;

  Point origin() const { return Point(dimension()); }

 private:
  std::vector<Rational> weights_;
};

/// Smallest N >= 1 with sum_{i >= N} 2^-i = 2^-(N-1) < epsilon. epsilon > 0.
std::size_t n_epsilon(const Rational& epsilon);

/// delta(epsilon) = epsilon / 2^(N_epsilon + 1), for 0 < epsilon < 1/2.
Rational delta(const Rational& epsilon);

/// Half-width s of the coordinate box {x : ||x||_i <= s for every i} inscribed
/// in the metric ball B(0, slack): s = slack / (1 - slack). Every x in the box
/// has metric(x, 0) <= (1 - 2^-d) slack < slack. Requires 0 <= slack < 1.
Rational inscribed_box_halfwidth(const Rational& slack);

/// True if ||x||_i <= halfwidth for every i.
bool within_box(const Space& space, const Point& x, const Rational& halfwidth);

/// A nonempty finite set of distinct points, kept in insertion order.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  explicit FinitePointSet(std::vector<Point> points);

  /// Adds p unless already present. Returns true if inserted.
  bool insert(const Point& p);
  bool contains(const Point& p) const;

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  /// ||M||_rho = max over points of ||x||_rho.
  Rational norm(const Space& space, std::size_t rho) const;
  /// max over rho <= min(important_count, d) of ||M||_rho.
  Rational max_norm(const Space& space, std::size_t important_count) const;
  /// max over points of the unweighted sup norm.
  Rational sup_norm() const;

  FinitePointSet scaled(const Rational& factor) const;

 private:
  std::vector<Point> points_;
};

/// A ground set A given either as an explicit finite list or as the scaled
/// lattice { p : scale * p has integer coordinates } (spacing 1/scale).
class GroundSet {
 public:
  static GroundSet lattice(std::size_t dimension, const Rational& scale);
  static GroundSet explicit_points(FinitePointSet points);

  bool is_lattice() const { return lattice_scale_.has_value(); }
  std::size_t dimension() const { return dimension_; }
  const Rational& scale() const;
  const FinitePointSet& points() const;

  bool contains(const Point& p) const;

  /// Smallest lattice value >= value (lattice kind only).
  Rational round_up(const Rational& value) const;

  /// Lattice point nearest the origin (the origin itself); for explicit sets, the
  /// point of minimal sup norm, ties broken toward lexicographically smaller
  /// coordinates.
  Point nearest_to_origin() const;

 private:
  GroundSet() = default;

  std::size_t dimension_ = 0;
  std::optional<Rational> lattice_scale_;
  FinitePointSet explicit_;
};

/// An infinite index set: all naturals, or {offset + j * stride : j >= 0}.
class IndexSet {
 public:
  static IndexSet all();
  static IndexSet progression(const Integer& offset, const Integer& stride);

  bool is_all() const { return stride_ == 1 && offset_ == 1; }
  const Integer& offset() const { return offset_; }
  const Integer& stride() const { return stride_; }

  bool contains(const Integer& n) const;
  /// Smallest element strictly greater than t.
  Integer next_above(const Integer& t) const;

 private:
  IndexSet(Integer offset, Integer stride) : offset_(std::move(offset)), stride_(std::move(stride)) {}
  Integer offset_;
  Integer stride_;
};

/// The 2^d corners (+-R, ..., +-R) where R is the smallest lattice value >= radius.
/// Requires a lattice ground set. Corners are ordered by sign pattern, with
/// coordinate 1 varying slowest and "-" before "+".
FinitePointSet cube_corners(const GroundSet& ground, const Rational& radius);

}  // namespace cesaro
