#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cesaro/kernel.hpp"
#include "cesaro/point.hpp"
#include "cesaro/rational.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

struct Counterexample {
  std::string check;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct AuditReport {
  static constexpr std::size_t kMaxStoredCounterexamples = 64;

  std::string suite;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::vector<CheckTally> checks;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool ok() const { return failed == 0; }

  /// Counts one comparison under `check`; failures keep the first few
  /// counterexamples with both sides as exact strings.
  bool record(const std::string& check, bool ok, const std::string& inputs, const std::string& lhs,
              const std::string& rhs);
  void skip(std::uint64_t count = 1) { skipped += count; }
  void param(std::string key, std::string value) { parameters.emplace_back(std::move(key), std::move(value)); }

  /// Adds the tallies of another report (used to combine sub-sweeps).
  void merge(const AuditReport& other);
};

/// Rational upper bound U on log(n) with U - log(n) < 2^-bits, from the
/// atanh series with a certified remainder. log(1) = 0 exactly.
Rational log_upper_bound(std::size_t n, unsigned bits = 48);

/// (1/n) * sum_{j<k} U^j / j!  with U = log_upper_bound(n, bits).
Rational log_row_bound(unsigned k, std::size_t n, unsigned bits = 48);

struct KernelAuditOptions {
  std::uint64_t seed = 1;
  std::size_t ratio_samples = 2000;   // random (n, lambda, Lambda) triples beyond the adjacent ones
  bool include_log_bound = true;
};

/// Row sums, monotonicity, the 2/n tail bound, the pointwise and block lower
/// bounds, the block upper bound 2 lambda / n, ratio chains between rows, the
/// eventual-smallness spot check and the logarithmic row bound, all exact.
AuditReport audit_kernel(const Kernel& kernel, unsigned k_max, std::size_t n_max,
                         const KernelAuditOptions& options = {});

/// Logarithmic row bound alone, for every entry with k <= k_max, n <= n_max.
AuditReport audit_log_bound(const Kernel& kernel, unsigned k_max, std::size_t n_max);

/// Convex-weight expansion of [T^k]_{n+a} over {[T^j]_n} and theta_{n+1..n+a},
/// and the one-step recurrence on random prefixes.
AuditReport audit_recurrence(const Kernel& kernel, unsigned k_max, std::size_t a_max, std::size_t n_max,
                             std::uint64_t seed);

/// apply_iterate against apply_iterate_oracle on seeded random prefixes.
AuditReport audit_oracle(const Kernel& kernel, std::size_t instances, unsigned k_max, std::size_t n_max,
                         std::size_t d_max, std::uint64_t seed);

/// Partial sums of a_t b_t against a_1 * M for decreasing 0 < a_t <= 2.
AuditReport audit_abel(std::size_t samples, std::uint64_t seed);

/// Second-iterate bound on seeded random [0, 1] prefixes, every n <= n_max.
AuditReport audit_second_iterate(const Kernel& kernel, std::size_t samples, std::size_t n_max,
                                 std::uint64_t seed);

struct DensityCell {
  Rational distance;     // min over n <= length of metric([T^k]_n, target)
  std::size_t argmin = 0;
};

struct DensityRow {
  unsigned k = 0;
  std::size_t target = 0;         // index into the target list
  std::vector<DensityCell> cells;  // one per checkpoint
};

struct DensityTable {
  std::vector<Point> targets;
  std::vector<unsigned> ks;
  std::vector<std::size_t> checkpoints;  // prefix lengths, ascending; last = full length
  std::vector<DensityRow> rows;

  /// Every row is nonincreasing along the checkpoints.
  bool monotone() const;
  /// Largest min-distance at the full length.
  Rational worst_final() const;
};

DensityTable audit_density(const Space& space, std::span<const Point> prefix, std::span<const Point> targets,
                           std::span<const unsigned> ks, std::vector<std::size_t> checkpoints = {});

}  // namespace cesaro
