#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "cesaro/point.hpp"
#include "cesaro/rational.hpp"

namespace cesaro {

/// Largest (k, n) the kernel cache may materialize.
struct KernelBudget {
  unsigned k_max = 8;
  std::size_t n_max = 4096;
};

/// Row n of T^k: the entries T^k_(n,1..n). Entries with m > n are zero.
using KernelRow = std::vector<Rational>;

/// Memoized table of the lower-triangular Cesàro iterate matrices T^k.
///
/// Row n of T^k is derived from the column-sum recurrence
///   T^k_(n,m) = (1/n) * sum_{i=m..n} T^{k-1}_(i,m),
/// accumulated in n so each row costs O(n) given the previous one.
/// Rows are built on demand and retained for the lifetime of the object.
/// Published rows are immutable; lookups take a shared lock and row
/// construction is serialized behind a unique lock, so one Kernel may be
/// read from many threads.
///
/// All indices are 1-based.
class Kernel {
 public:
  explicit Kernel(KernelBudget budget = {});

  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  const KernelBudget& budget() const { return budget_; }

  /// T^k_(n,m). Throws BudgetExceeded if (k, n) lies outside the budget.
  Rational entry(unsigned k, std::size_t n, std::size_t m) const;

  /// [T^k_(n,1), ..., T^k_(n,n)]; sums to exactly 1.
  std::shared_ptr<const KernelRow> row(unsigned k, std::size_t n) const;

  /// Number of rows currently held by the cache.
  std::size_t cached_rows() const;

 private:
  void check(unsigned k, std::size_t n, std::size_t m) const;
  void extend(unsigned k, std::size_t n) const;

  KernelBudget budget_;
  mutable std::shared_mutex mutex_;
  // levels_[k - 2][n - 1] holds row n of T^k for k >= 2; T^1 is closed form.
  mutable std::vector<std::vector<std::shared_ptr<const KernelRow>>> levels_;
};

/// Row n of T^k computed without the cache, as e_n^T T^k by k successive
/// right-multiplications with T (suffix sums). O(k n) time and O(n) memory.
KernelRow iterate_row(unsigned k, std::size_t n);

/// [T^k(theta)]_n = sum_m T^k_(n,m) theta_m through the kernel table.
/// k = 0 is the identity and returns theta_n.
Point apply_iterate(const Kernel& kernel, unsigned k, std::span<const Point> prefix, std::size_t n);

/// [T^k(theta)]_n by literally applying the running-average map k times to
/// theta_1..theta_n. Independent of the kernel table.
Point apply_iterate_oracle(unsigned k, std::span<const Point> prefix, std::size_t n);

/// Kernel mass of block i (1-based) of the partition v, lambda_1..lambda_k:
///   phi_i = sum_{j=1..lambda_i} T^{k+1-i}_(v+lambda_1+..+lambda_i, v+..+lambda_{i-1}+j).
Rational phi(const Kernel& kernel, std::size_t v, std::span<const std::size_t> lambdas, std::size_t i);

struct RecurrenceCheck {
  bool holds = true;
  std::string report;
};

/// Verifies exactly that
///   [T^k]_{n+a} = n/(n+a) [T^k]_n + ([T^{k-1}]_{n+1} + ... + [T^{k-1}]_{n+a}) / (n+a).
RecurrenceCheck recurrence_check(const Kernel& kernel, unsigned k, std::span<const Point> prefix,
                                 std::size_t n, std::size_t a);

}  // namespace cesaro
