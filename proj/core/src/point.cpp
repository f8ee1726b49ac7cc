#include "cesaro/point.hpp"

#include "cesaro/errors.hpp"

namespace cesaro {
namespace {

void require_same_dimension(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                            std::to_string(b.dimension()));
  }
}

}  // namespace

bool Point::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Rational Point::sup_norm() const {
  Rational best = 0;
  for (const auto& c : coords_) {
    Rational a = rational::abs(c);
    if (a > best) best = a;
  }
  return best;
}

Point& Point::operator+=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

Point& Point::operator/=(const Rational& scalar) {
  if (scalar == 0) throw PreconditionError("division of a point by zero");
  for (auto& c : coords_) c /= scalar;
  return *this;
}

Point& Point::add_scaled(const Rational& scalar, const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += scalar * other.coords_[i];
  return *this;
}

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += rational::to_string(coords_[i]);
  }
  return out + ")";
}

void require_dimension(std::span<const Point> points, std::size_t dimension) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dimension() != dimension) {
      throw PreconditionError("term " + std::to_string(i + 1) + " has dimension " +
                              std::to_string(points[i].dimension()) + ", expected " +
                              std::to_string(dimension));
    }
  }
}

}  // namespace cesaro
