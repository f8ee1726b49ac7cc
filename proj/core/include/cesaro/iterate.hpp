#pragma once

#include <cstddef>
#include <vector>

#include "cesaro/point.hpp"

namespace cesaro {

/// Running values [T^j(theta)]_n for j = 0..k while terms are appended one at a
/// time. Each push costs O(k d) exact operations:
///   [T^j]_n = [T^j]_{n-1} + ([T^{j-1}]_n - [T^j]_{n-1}) / n.
class IterateTracker {
 public:
  IterateTracker(unsigned k, std::size_t dimension);

  void push(const Point& theta);
  void push_all(std::span<const Point> terms);

  unsigned k() const { return k_; }
  std::size_t length() const { return n_; }

  /// [T^j(theta)]_n at the current length n >= 1; j = 0 is the last term.
  const Point& value(unsigned j) const;

 private:
  unsigned k_;
  std::size_t n_ = 0;
  std::vector<Point> current_;
};

}  // namespace cesaro
