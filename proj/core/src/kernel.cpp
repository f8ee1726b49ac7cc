#include "cesaro/kernel.hpp"

#include <mutex>

#include "cesaro/errors.hpp"

namespace cesaro {

Kernel::Kernel(KernelBudget budget) : budget_(budget) {
  if (budget_.k_max < 1 || budget_.n_max < 1) {
    throw PreconditionError("kernel budget must allow k >= 1 and n >= 1");
  }
}

void Kernel::check(unsigned k, std::size_t n, std::size_t m) const {
  if (k < 1 || n < 1 || m < 1) {
    throw PreconditionError("kernel indices are 1-based: got (k, n, m) = (" + std::to_string(k) +
                            ", " + std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  if (k > budget_.k_max || n > budget_.n_max) {
    throw BudgetExceeded("kernel cache budget exceeded: requested (k, n) = (" + std::to_string(k) +
                         ", " + std::to_string(n) + "), budget (" + std::to_string(budget_.k_max) +
                         ", " + std::to_string(budget_.n_max) + ")");
  }
}

Rational Kernel::entry(unsigned k, std::size_t n, std::size_t m) const {
  check(k, n, m);
  if (m > n) return 0;
  if (k == 1) return rational::frac(1, n);
  return (*row(k, n))[m - 1];
}

std::shared_ptr<const KernelRow> Kernel::row(unsigned k, std::size_t n) const {
  check(k, n, 1);
  if (k == 1) {
    return std::make_shared<const KernelRow>(n, rational::frac(1, n));
  }
  {
    std::shared_lock lock(mutex_);
    if (levels_.size() >= k - 1 && levels_[k - 2].size() >= n) return levels_[k - 2][n - 1];
  }
  std::unique_lock lock(mutex_);
  extend(k, n);
  return levels_[k - 2][n - 1];
}

// Caller holds the unique lock.
void Kernel::extend(unsigned k, std::size_t n) const {
  if (levels_.size() < k - 1) levels_.resize(k - 1);
  for (unsigned level = 2; level <= k; ++level) {
    auto& rows = levels_[level - 2];
    while (rows.size() < n) {
      std::size_t r = rows.size() + 1;
      // Row r of T^level from row r-1 of T^level and row r of T^{level-1}:
      //   r T^level_(r,m) = (r-1) T^level_(r-1,m) + T^{level-1}_(r,m).
      auto next = std::make_shared<KernelRow>(r);
      const KernelRow* lower = level > 2 ? levels_[level - 3][r - 1].get() : nullptr;
      const Rational lower_first_order(1, r);
      for (std::size_t m = 1; m <= r; ++m) {
        const Rational& below = lower ? (*lower)[m - 1] : lower_first_order;
        Rational value = below;
        if (m < r) value += Rational(r - 1) * (*rows[r - 2])[m - 1];
        value /= r;
        (*next)[m - 1] = std::move(value);
      }
      rows.push_back(std::move(next));
    }
  }
}

std::size_t Kernel::cached_rows() const {
  std::shared_lock lock(mutex_);
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

KernelRow iterate_row(unsigned k, std::size_t n) {
  if (k < 1 || n < 1) throw PreconditionError("iterate_row requires k >= 1 and n >= 1");
  KernelRow row(n, rational::frac(1, n));
  for (unsigned level = 2; level <= k; ++level) {
    // (r T)_j = sum_{i=j..n} r_i / i
    Rational suffix = 0;
    for (std::size_t j = n; j >= 1; --j) {
      suffix += row[j - 1] / Rational(j);
      row[j - 1] = suffix;
    }
  }
  return row;
}

Point apply_iterate(const Kernel& kernel, unsigned k, std::span<const Point> prefix, std::size_t n) {
  if (n < 1 || n > prefix.size()) {
    throw PreconditionError("apply_iterate: n = " + std::to_string(n) + " exceeds prefix length " +
                            std::to_string(prefix.size()));
  }
  if (k == 0) return prefix[n - 1];
  auto weights = kernel.row(k, n);
  Point result(prefix[0].dimension());
  for (std::size_t m = 0; m < n; ++m) result.add_scaled((*weights)[m], prefix[m]);
  return result;
}

Point apply_iterate_oracle(unsigned k, std::span<const Point> prefix, std::size_t n) {
  if (n < 1 || n > prefix.size()) {
    throw PreconditionError("apply_iterate_oracle: n = " + std::to_string(n) +
                            " exceeds prefix length " + std::to_string(prefix.size()));
  }
  std::vector<Point> current(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(n));
  for (unsigned level = 0; level < k; ++level) {
    Point running(current[0].dimension());
    for (std::size_t i = 0; i < n; ++i) {
      running += current[i];
      current[i] = running / Rational(i + 1);
    }
  }
  return current[n - 1];
}

Rational phi(const Kernel& kernel, std::size_t v, std::span<const std::size_t> lambdas, std::size_t i) {
  const std::size_t k = lambdas.size();
  if (v < 1 || i < 1 || i > k) {
    throw PreconditionError("phi requires v >= 1 and 1 <= i <= k");
  }
  std::size_t block_start = v;
  for (std::size_t j = 0; j + 1 < i; ++j) block_start += lambdas[j];
  for (auto lambda : lambdas) {
    if (lambda < 1) throw PreconditionError("phi requires every lambda >= 1");
  }
  const std::size_t row_index = block_start + lambdas[i - 1];
  const auto order = static_cast<unsigned>(k + 1 - i);
  Rational total = 0;
  for (std::size_t j = 1; j <= lambdas[i - 1]; ++j) {
    total += kernel.entry(order, row_index, block_start + j);
  }
  return total;
}

RecurrenceCheck recurrence_check(const Kernel& kernel, unsigned k, std::span<const Point> prefix,
                                 std::size_t n, std::size_t a) {
  if (k < 1 || n < 1 || n + a > prefix.size()) {
    throw PreconditionError("recurrence_check requires k >= 1, n >= 1 and n + a <= prefix length");
  }
  Point lhs = apply_iterate(kernel, k, prefix, n + a);
  Point rhs = apply_iterate(kernel, k, prefix, n) * rational::frac(n, n + a);
  for (std::size_t j = n + 1; j <= n + a; ++j) {
    rhs.add_scaled(rational::frac(1, n + a), apply_iterate(kernel, k - 1, prefix, j));
  }
  RecurrenceCheck result;
  result.holds = lhs == rhs;
  if (!result.holds) {
    result.report = "recurrence violated at k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                    ", a=" + std::to_string(a) + ": lhs " + lhs.to_string() + " rhs " +
                    rhs.to_string();
  }
  return result;
}

}  // namespace cesaro
