#include "cesaro/iterate.hpp"

#include "cesaro/errors.hpp"

namespace cesaro {

IterateTracker::IterateTracker(unsigned k, std::size_t dimension)
    : k_(k), current_(k + 1, Point(dimension)) {}

void IterateTracker::push(const Point& theta) {
  if (theta.dimension() != current_[0].dimension()) {
    throw PreconditionError("tracked term has the wrong dimension");
  }
  ++n_;
  const Rational n(static_cast<unsigned long>(n_));
  current_[0] = theta;
  for (unsigned j = 1; j <= k_; ++j) {
    Point step = current_[j - 1] - current_[j];
    current_[j].add_scaled(1 / n, step);
  }
}

void IterateTracker::push_all(std::span<const Point> terms) {
  for (const auto& t : terms) push(t);
}

const Point& IterateTracker::value(unsigned j) const {
  if (n_ == 0) throw PreconditionError("no terms tracked yet");
  if (j > k_) throw PreconditionError("iterate order above tracker depth");
  return current_[j];
}

}  // namespace cesaro
