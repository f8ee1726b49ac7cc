#include "cesaro/space.hpp"

#include <algorithm>

#include "cesaro/errors.hpp"

namespace cesaro {

Space::Space(std::size_t dimension) : Space(std::vector<Rational>(dimension, Rational(1))) {}

Space::Space(std::vector<Rational> seminorm_weights) : weights_(std::move(seminorm_weights)) {
  if (weights_.empty()) throw PreconditionError("space dimension must be >= 1");
  for (const auto& w : weights_) {
    if (w <= 0) throw PreconditionError("seminorm weights must be positive");
  }
}

Rational Space::seminorm(std::size_t rho, const Point& x) const {
  if (rho < 1 || rho > dimension()) {
    throw PreconditionError("seminorm index " + std::to_string(rho) + " outside 1.." +
                            std::to_string(dimension()));
  }
  if (x.dimension() != dimension()) throw PreconditionError("point dimension does not match space");
  return weights_[rho - 1] * rational::abs(x[rho - 1]);
}

Rational Space::metric(const Point& x, const Point& y) const {
  if (x.dimension() != dimension() || y.dimension() != dimension()) {
    throw PreconditionError("point dimension does not match space");
  }
  Rational total = 0;
  for (std::size_t i = 1; i <= dimension(); ++i) {
    Rational s = weights_[i - 1] * rational::abs(x[i - 1] - y[i - 1]);
    total += rational::pow2(-static_cast<long>(i)) * s / (1 + s);
  }
  return total;
}

Rational Space::norm_to_zero(const Point& x) const { return metric(x, origin()); }

std::size_t Space::active(std::size_t important_count) const {
  return std::min(important_count, dimension());
}

std::size_t n_epsilon(const Rational& epsilon) {
  if (epsilon <= 0) throw PreconditionError("n_epsilon requires epsilon > 0");
  std::size_t n = 1;
  Rational tail = 1;  // 2^-(n-1)
  while (!(tail < epsilon)) {
    ++n;
    tail /= 2;
  }
  return n;
}

Rational delta(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) {
    throw PreconditionError("delta requires 0 < epsilon < 1/2, got " + rational::to_string(epsilon));
  }
  return epsilon * rational::pow2(-static_cast<long>(n_epsilon(epsilon) + 1));
}

Rational inscribed_box_halfwidth(const Rational& slack) {
  if (slack < 0 || slack >= 1) {
    throw PreconditionError("inscribed box requires 0 <= slack < 1");
  }
  return slack / (1 - slack);
}

bool within_box(const Space& space, const Point& x, const Rational& halfwidth) {
  for (std::size_t rho = 1; rho <= space.dimension(); ++rho) {
    if (space.seminorm(rho, x) > halfwidth) return false;
  }
  return true;
}

FinitePointSet::FinitePointSet(std::vector<Point> points) {
  for (auto& p : points) {
    if (!insert(p)) throw PreconditionError("duplicate point " + p.to_string() + " in point set");
  }
}

bool FinitePointSet::insert(const Point& p) {
  if (!points_.empty() && p.dimension() != points_.front().dimension()) {
    throw PreconditionError("point set dimension mismatch");
  }
  if (contains(p)) return false;
  points_.push_back(p);
  return true;
}

bool FinitePointSet::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

Rational FinitePointSet::norm(const Space& space, std::size_t rho) const {
  if (points_.empty()) throw PreconditionError("norm of an empty point set");
  Rational best = 0;
  for (const auto& p : points_) {
    Rational s = space.seminorm(rho, p);
    if (s > best) best = s;
  }
  return best;
}

Rational FinitePointSet::max_norm(const Space& space, std::size_t important_count) const {
  Rational best = 0;
  for (std::size_t rho = 1; rho <= space.active(important_count); ++rho) {
    Rational s = norm(space, rho);
    if (s > best) best = s;
  }
  return best;
}

Rational FinitePointSet::sup_norm() const {
  Rational best = 0;
  for (const auto& p : points_) {
    Rational s = p.sup_norm();
    if (s > best) best = s;
  }
  return best;
}

FinitePointSet FinitePointSet::scaled(const Rational& factor) const {
  FinitePointSet out;
  for (const auto& p : points_) out.insert(p * factor);
  return out;
}

GroundSet GroundSet::lattice(std::size_t dimension, const Rational& scale) {
  if (dimension < 1) throw PreconditionError("ground set dimension must be >= 1");
  if (scale <= 0) throw PreconditionError("lattice scale must be positive");
  GroundSet g;
  g.dimension_ = dimension;
  g.lattice_scale_ = scale;
  return g;
}

GroundSet GroundSet::explicit_points(FinitePointSet points) {
  if (points.empty()) throw PreconditionError("explicit ground set must be nonempty");
  GroundSet g;
  g.dimension_ = points[0].dimension();
  g.explicit_ = std::move(points);
  return g;
}

const Rational& GroundSet::scale() const {
  if (!lattice_scale_) throw PreconditionError("ground set is not a lattice");
  return *lattice_scale_;
}

const FinitePointSet& GroundSet::points() const {
  if (lattice_scale_) throw PreconditionError("lattice ground set has no explicit point list");
  return explicit_;
}

bool GroundSet::contains(const Point& p) const {
  if (p.dimension() != dimension_) return false;
  if (!lattice_scale_) return explicit_.contains(p);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    Rational scaled = p[i] * *lattice_scale_;
    if (scaled.get_den() != 1) return false;
  }
  return true;
}

Rational GroundSet::round_up(const Rational& value) const {
  const Rational& q = scale();
  return Rational(rational::ceil(value * q)) / q;
}

Point GroundSet::nearest_to_origin() const {
  if (lattice_scale_) return Point(dimension_);
  const Point* best = &explicit_[0];
  for (const auto& p : explicit_.points()) {
    Rational a = p.sup_norm();
    Rational b = best->sup_norm();
    if (a < b || (a == b && p < *best)) best = &p;
  }
  return *best;
}

IndexSet IndexSet::all() { return IndexSet(1, 1); }

IndexSet IndexSet::progression(const Integer& offset, const Integer& stride) {
  if (offset < 1 || stride < 1) throw PreconditionError("index progression needs offset >= 1, stride >= 1");
  return IndexSet(offset, stride);
}

bool IndexSet::contains(const Integer& n) const {
  if (n < offset_) return false;
  Integer rem = (n - offset_) % stride_;
  return rem == 0;
}

Integer IndexSet::next_above(const Integer& t) const {
  if (t < offset_) return offset_;
  // smallest offset + j*stride > t
  Integer j = (t - offset_) / stride_ + 1;
  return offset_ + j * stride_;
}

FinitePointSet cube_corners(const GroundSet& ground, const Rational& radius) {
  if (!ground.is_lattice()) throw PreconditionError("cube_corners requires a lattice ground set");
  if (radius <= 0) throw PreconditionError("cube_corners requires a positive radius");
  const std::size_t d = ground.dimension();
  const Rational r = ground.round_up(radius);
  FinitePointSet corners;
  const std::size_t count = std::size_t{1} << d;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) {
      bool positive = (mask >> (d - 1 - i)) & 1U;
      p[i] = positive ? r : Rational(-r);
    }
    corners.insert(p);
  }
  return corners;
}

}  // namespace cesaro
