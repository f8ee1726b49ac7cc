#include "cesaro/audit.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/iterate.hpp"

namespace cesaro {
namespace {

using rational::to_string;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational random_rational(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 64);
  return rational::frac(num(rng), den(rng));
}

Rational random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 64);
  long q = den(rng);
  std::uniform_int_distribution<long> num(0, q);
  return rational::frac(num(rng), q);
}

Point random_point(std::mt19937_64& rng, std::size_t d, long range) {
  Point p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = random_rational(rng, range);
  return p;
}

}  // namespace

bool AuditReport::record(const std::string& check, bool ok, const std::string& inputs, const std::string& lhs,
                         const std::string& rhs) {
  ++checked;
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckTally& t) { return t.name == check; });
  if (it == checks.end()) {
    checks.push_back({check, 0, 0});
    it = std::prev(checks.end());
  }
  ++it->checked;
  if (ok) {
    ++passed;
  } else {
    ++failed;
    ++it->failed;
    if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back({check, inputs, lhs, rhs});
  }
  return ok;
}

void AuditReport::merge(const AuditReport& other) {
  checked += other.checked;
  passed += other.passed;
  failed += other.failed;
  skipped += other.skipped;
  for (const auto& t : other.checks) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckTally& c) { return c.name == t.name; });
    if (it == checks.end()) {
      checks.push_back(t);
    } else {
      it->checked += t.checked;
      it->failed += t.failed;
    }
  }
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(c);
  }
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

AuditReport audit_recurrence(const Kernel& kernel, unsigned k_max, std::size_t a_max, std::size_t n_max,
                             std::uint64_t seed) {
  const auto started = Clock::now();
  AuditReport report;
  report.suite = "recurrence";
  report.param("k_max", std::to_string(k_max));
  report.param("a_max", std::to_string(a_max));
  report.param("n_max", std::to_string(n_max));
  report.param("seed", std::to_string(seed));
  std::mt19937_64 rng(seed);

  // weights[0..k-1] on [T^1..T^k]_n, weights[k..k+a-1] on theta_{n+1..n+a}
  struct Expansion {
    std::size_t k, n;
    std::vector<Rational> w;
  };
  for (unsigned k = 1; k <= k_max; ++k) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t a = 1; a <= a_max; ++a) {
        std::vector<Rational> weights(k + a);
        // expand(j, t, factor): add factor * [T^j]_{n+t}
        auto expand = [&](auto& self, unsigned j, std::size_t t, const Rational& factor) -> void {
          if (j == 0) {
            weights[k + t - 1] += factor;
            return;
          }
          const Rational total(static_cast<unsigned long>(n + t));
          weights[j - 1] += factor * Rational(static_cast<unsigned long>(n)) / total;
          for (std::size_t s = 1; s <= t; ++s) self(self, j - 1, s, factor / total);
        };
        expand(expand, k, a, Rational(1));

        Rational sum = 0;
        bool nonneg = true;
        for (const auto& w : weights) {
          sum += w;
          if (w < 0) nonneg = false;
        }
        const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " a=" + std::to_string(a);
        report.record("convex-weights", nonneg && sum == 1, tag, to_string(sum), "1");

        std::size_t d = 1 + (n + a) % 2;
        SeqPrefix prefix;
        for (std::size_t i = 0; i < n + a; ++i) prefix.push_back(random_point(rng, d, 50));
        Point rebuilt(d);
        for (unsigned j = 1; j <= k; ++j) rebuilt.add_scaled(weights[j - 1], apply_iterate(kernel, j, prefix, n));
        for (std::size_t t = 1; t <= a; ++t) rebuilt.add_scaled(weights[k + t - 1], prefix[n + t - 1]);
        Point direct = apply_iterate(kernel, k, prefix, n + a);
        report.record("convex-expansion", rebuilt == direct, tag, rebuilt.to_string(), direct.to_string());

        RecurrenceCheck rc = recurrence_check(kernel, k, prefix, n, a);
        report.record("one-step", rc.holds, tag, rc.report, "");
      }
    }
  }
  report.wall_seconds = seconds_since(started);
  return report;
}

AuditReport audit_oracle(const Kernel& kernel, std::size_t instances, unsigned k_max, std::size_t n_max,
                         std::size_t d_max, std::uint64_t seed) {
  const auto started = Clock::now();
  AuditReport report;
  report.suite = "oracle";
  report.param("instances", std::to_string(instances));
  report.param("k_max", std::to_string(k_max));
  report.param("n_max", std::to_string(n_max));
  report.param("d_max", std::to_string(d_max));
  report.param("seed", std::to_string(seed));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick_k(1, k_max);
  std::uniform_int_distribution<std::size_t> pick_n(1, n_max);
  std::uniform_int_distribution<std::size_t> pick_d(1, d_max);
  for (std::size_t s = 0; s < instances; ++s) {
    unsigned k = pick_k(rng);
    std::size_t n = pick_n(rng);
    std::size_t d = pick_d(rng);
    SeqPrefix prefix;
    for (std::size_t i = 0; i < n; ++i) prefix.push_back(random_point(rng, d, 100));
    Point cached = apply_iterate(kernel, k, prefix, n);
    Point literal = apply_iterate_oracle(k, prefix, n);
    report.record("apply-iterate", cached == literal,
                  "instance=" + std::to_string(s) + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                      " d=" + std::to_string(d),
                  cached.to_string(), literal.to_string());
  }
  report.wall_seconds = seconds_since(started);
  return report;
}

AuditReport audit_abel(std::size_t samples, std::uint64_t seed) {
  const auto started = Clock::now();
  AuditReport report;
  report.suite = "abel";
  report.param("samples", std::to_string(samples));
  report.param("seed", std::to_string(seed));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_len(1, 12);
  std::uniform_int_distribution<std::size_t> pick_d(1, 3);
  std::uniform_int_distribution<long> den(1, 64);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t lambda = pick_len(rng);
    const std::size_t d = pick_d(rng);
    const Space space(d);
    std::vector<Rational> a;
    for (std::size_t t = 0; t < lambda; ++t) {
      long q = den(rng);
      std::uniform_int_distribution<long> num(1, 2 * q);
      a.push_back(rational::frac(num(rng), q));
    }
    std::sort(a.begin(), a.end(), std::greater<>());
    std::vector<Point> b;
    for (std::size_t t = 0; t < lambda; ++t) b.push_back(random_point(rng, d, 20));

    for (std::size_t rho = 1; rho <= d; ++rho) {
      Rational bound = 0;
      Point partial(d);
      for (const auto& bt : b) {
        partial += bt;
        bound = std::max(bound, space.seminorm(rho, partial));
      }
      Point weighted(d);
      for (std::size_t j = 0; j < lambda; ++j) {
        weighted.add_scaled(a[j], b[j]);
        Rational lhs = space.seminorm(rho, weighted);
        report.record("abel-partial-sum", lhs <= a[0] * bound,
                      "sample=" + std::to_string(s) + " rho=" + std::to_string(rho) + " j=" + std::to_string(j + 1),
                      to_string(lhs), to_string(a[0] * bound));
      }
    }
  }
  report.wall_seconds = seconds_since(started);
  return report;
}

AuditReport audit_second_iterate(const Kernel& kernel, std::size_t samples, std::size_t n_max, std::uint64_t seed) {
  const auto started = Clock::now();
  AuditReport report;
  report.suite = "second-iterate";
  report.param("samples", std::to_string(samples));
  report.param("n_max", std::to_string(n_max));
  report.param("seed", std::to_string(seed));
  std::mt19937_64 rng(seed);
  // sparsity 2^-s for s = 0..5 cycles with the sample index so the hypothesis
  // [T(a)]_n < 1/8 is triggered often
  std::uniform_int_distribution<unsigned> coin(0, 31);
  for (std::size_t s = 0; s < samples; ++s) {
    const unsigned sparsity = static_cast<unsigned>(s % 6);
    std::vector<Rational> a;
    for (std::size_t i = 0; i < n_max; ++i) {
      bool nonzero = (coin(rng) >> (5 - sparsity)) == 0;
      a.push_back(nonzero ? random_unit(rng) : Rational(0));
    }
    IterateTracker tracker(2, 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      tracker.push(Point{a[n - 1]});
      const std::string tag = "sample=" + std::to_string(s) + " n=" + std::to_string(n);
      const Rational& t1 = tracker.value(1)[0];
      const Rational& t2 = tracker.value(2)[0];
      report.record("unit-interval", t1 >= 0 && t1 <= 1 && t2 >= 0 && t2 <= 1, tag, to_string(t1), to_string(t2));

      SecondIterateReport r = second_iterate_check(kernel, a, n);
      report.record("tracker-agrees", r.first == t1 && r.second == t2, tag, to_string(r.second), to_string(t2));
      if (!r.hypothesis) {
        report.skip();
        continue;
      }
      report.record("second-below-15/16", r.conclusion, tag, to_string(r.second), "15/16");
      report.record("half-terms-small", r.small_half, tag, std::to_string(r.small_terms), std::to_string(n) + "/2");
      report.record("tail-mass", r.tail_ok, tag, to_string(r.tail_mass), "1/8");
    }
  }
  report.notes.push_back("skipped counts (n, prefix) cells where [T(a)]_n >= 1/8");
  report.wall_seconds = seconds_since(started);
  return report;
}

bool DensityTable::monotone() const {
  for (const auto& row : rows) {
    for (std::size_t i = 1; i < row.cells.size(); ++i) {
      if (row.cells[i].distance > row.cells[i - 1].distance) return false;
    }
  }
  return true;
}

Rational DensityTable::worst_final() const {
  Rational worst = 0;
  for (const auto& row : rows) {
    if (!row.cells.empty()) worst = std::max(worst, row.cells.back().distance);
  }
  return worst;
}

DensityTable audit_density(const Space& space, std::span<const Point> prefix, std::span<const Point> targets,
                           std::span<const unsigned> ks, std::vector<std::size_t> checkpoints) {
  if (prefix.empty()) throw PreconditionError("density audit needs a nonempty prefix");
  if (targets.empty() || ks.empty()) throw PreconditionError("density audit needs targets and iterate orders");
  require_dimension(prefix, space.dimension());
  require_dimension(targets, space.dimension());
  if (checkpoints.empty()) {
    for (std::size_t c = 1; c <= 10; ++c) checkpoints.push_back(std::max<std::size_t>(1, prefix.size() * c / 10));
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (checkpoints.back() > prefix.size()) throw PreconditionError("checkpoint past the prefix");

  DensityTable table;
  table.targets.assign(targets.begin(), targets.end());
  table.ks.assign(ks.begin(), ks.end());
  table.checkpoints = checkpoints;
  for (unsigned k : ks) {
    if (k < 1) throw PreconditionError("iterate orders start at 1");
    for (std::size_t t = 0; t < targets.size(); ++t) table.rows.push_back({k, t, {}});
  }
  const unsigned depth = *std::max_element(ks.begin(), ks.end());
  IterateTracker tracker(depth, space.dimension());
  std::vector<DensityCell> best(table.rows.size());
  std::size_t next_checkpoint = 0;
  for (std::size_t n = 1; n <= checkpoints.back(); ++n) {
    tracker.push(prefix[n - 1]);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      Rational d = space.metric(tracker.value(table.rows[r].k), targets[table.rows[r].target]);
      if (best[r].argmin == 0 || d < best[r].distance) best[r] = {d, n};
    }
    if (n == checkpoints[next_checkpoint]) {
      for (std::size_t r = 0; r < table.rows.size(); ++r) table.rows[r].cells.push_back(best[r]);
      ++next_checkpoint;
    }
  }
  return table;
}

}  // namespace cesaro
