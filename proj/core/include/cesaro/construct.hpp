#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cesaro/kernel.hpp"
#include "cesaro/point.hpp"
#include "cesaro/rational.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

inline constexpr std::size_t kDefaultTermCap = 1'000'000;

// ---------------------------------------------------------------------------
// Block-repetition sequence

/// Block length g(n) for the n-th enumerated value.
using Growth = std::function<Integer(std::size_t)>;

Growth unit_growth();
Growth linear_growth();
/// g(n) = base^n.
Growth power_growth(unsigned long base);
/// g(n) = n^(n^3); only the first two blocks are of practical size.
Growth tower_growth();

/// 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3/2, ... : zero followed by the
/// Calkin-Wilf order with each positive value paired with its negative.
/// Injective, covers Q, and |q_j| <= j.
std::vector<Rational> signed_calkin_wilf(std::size_t count);

/// Streams q_1 repeated g(1) times, q_2 repeated g(2) times, ... in dimension 1.
class DenseSequence {
 public:
  DenseSequence(std::vector<Rational> enumeration, Growth growth);

  /// The first `length` terms. Throws PreconditionError if the enumeration is
  /// exhausted first.
  SeqPrefix prefix(std::size_t length) const;

  /// Index of the block containing term n (1-based) and the block's value.
  std::pair<std::size_t, Rational> block_of(std::size_t n) const;

  const std::vector<Rational>& enumeration() const { return enumeration_; }

 private:
  std::vector<Rational> enumeration_;
  Growth growth_;
};

// ---------------------------------------------------------------------------
// Single-target extension

/// One atom of a finite convex combination.
struct ConvexAtom {
  Rational coefficient;
  Point point;
};
using ConvexWitness = std::vector<ConvexAtom>;

/// Checks coefficients in (0, 1], sum exactly 1, atoms in the ground set.
void validate_witness(const ConvexWitness& witness, const GroundSet& ground);

struct ExtendResult {
  std::vector<Point> terms;          // appended terms theta_{rho+1}..theta_{n_0}
  std::size_t n0 = 0;                // certified index
  std::size_t m = 0;                 // tuple length
  std::vector<std::size_t> counts;   // m_i per atom, summing to m
  Point x_prime;                     // sum (m_i/m) A_i
  Rational distance;                 // metric([T^k]_{n_0}, x)
  Rational distance_prime;           // metric([T^k]_{n_0}, x')
  Rational rounding_distance;        // metric(x, x')
};

/// Appends repeated m-tuples A_1^{m_1} ... A_v^{m_v} to the prefix until the
/// first n_0 with metric([T^k]_{n_0}, x') < eps/3, where x' is the rounded
/// target. Certifies metric([T^k]_{n_0}, x) < eps exactly.
ExtendResult extend_to_target(const Space& space, std::span<const Point> prefix,
                              const ConvexWitness& target, const Rational& epsilon, unsigned k,
                              std::size_t term_cap = kDefaultTermCap);

/// m_i = floor(lambda_i m), then the deficit is handed out one unit at a time
/// by largest fractional part (ties to the lower atom index).
std::vector<std::size_t> round_counts(std::span<const Rational> lambdas, std::size_t m);

// ---------------------------------------------------------------------------
// Nested covering sets and partitions

struct MChain {
  std::vector<FinitePointSet> sets;                     // M^0 .. M^k
  std::vector<std::pair<Rational, Rational>> intervals;  // [c_i, d_i], i = 1..k
  std::vector<Rational> radii;                           // cube radius requested for M^i
  std::vector<Rational> scales;                          // covering scale factor for M^i
  Rational epsilon;
  unsigned k = 0;
};

/// Builds M^i = cube corners at radius_i union M^{i-1} for i = 1..k with
///   radius_i = [k/eps (10 ||M^{i-1}||_max + 2)]^(k+1-i) (k+1-i)! 2 ||M^{i-1}||_inf
/// and verifies the covering on every scaled extreme point with exact hull
/// witnesses. Interval ends are
///   c_i = (eps/k) / (10 ||M^{i-1}||_max + 2),  d_i = (eps/k) / (5 ||M^{i-1}||_max + 1),
/// where ||.||_max ranges over the first N_{eps/3} seminorms.
MChain build_m_chain(const Space& space, const GroundSet& ground, const FinitePointSet& m0,
                     const Rational& epsilon, unsigned k);

struct Partition {
  std::size_t v = 0;
  std::vector<std::size_t> lambdas;
  std::size_t m = 0;

  /// v + lambda_1 + ... + lambda_i.
  std::size_t block_end(std::size_t i) const;
};

/// Smallest m_0 with m_0 > 2/(d_k - c_k), m_0 > 2 v_1,
/// m_0 > (4/3) 6 #M^k ||M^k||_rho and m_0 (1 - sum d_i) > 12 #M^k ||M^k||_rho / eps.
Integer partition_threshold(const Space& space, const MChain& chain, std::size_t v1);

/// Backward choice: lambda_i is the smallest natural with
/// lambda_i / (m - lambda_k - ... - lambda_{i+1}) in [c_i, d_i]. Requires
/// m > 2/(d_k - c_k); returns a partition with v > m/2.
Partition choose_partition(std::size_t m, std::span<const std::pair<Rational, Rational>> intervals);

/// gamma_i = lambda_i / (v + lambda_1 + ... + lambda_i).
Rational partition_gamma(const Partition& part, std::size_t i);

// ---------------------------------------------------------------------------
// Block assignment

struct AtomRun {
  std::size_t atom = 0;   // index into StageRecord::atoms
  std::size_t count = 0;  // consecutive terms
};

struct StageRecord {
  unsigned stage = 0;       // i = 1..k
  unsigned order = 0;       // k + 1 - i, the iterate this block steers
  std::size_t start = 0;    // v + lambda_1 + ... + lambda_{i-1}
  std::size_t end = 0;      // v + lambda_1 + ... + lambda_i
  Rational phi;
  Point target;
  Point partial_sum;        // S
  Point x_prime;
  std::vector<Point> atoms;          // atoms with positive coefficient
  std::vector<Rational> g;           // their convex coefficients
  std::size_t rounds = 0;            // N
  std::vector<AtomRun> runs;
  std::vector<Rational> gamma;       // final kernel-weighted coefficient per atom
  std::vector<Rational> residuals;   // gamma_t - g_t phi
  Point end_value;                   // [T^order]_end
  std::vector<Rational> end_seminorm_distances;  // ||[T^order]_end - target||_rho
  std::vector<Rational> block_bound;             // 5 ||M^{i-1}||_rho + 1
  std::vector<Rational> block_peak;              // max over the block of ||[T^order]_j||_rho
};

struct AssignResult {
  std::vector<Point> terms;  // theta_{v+1}..theta_m
  std::vector<StageRecord> stages;
};

/// Fills the k blocks after theta_1..theta_v with atoms of M^1..M^k so that
/// [T^{k+1-i}]_{block end} lands within eps/3 of x_{k+1-i} in every
/// eps/3-important seminorm. The partial-sum residuals, the endpoint bound and
/// the in-block bound 5 ||M^{i-1}||_rho + 1 are asserted exactly.
AssignResult assign_blocks(const Space& space, std::span<const Point> prefix, const MChain& chain,
                           const Partition& part, std::span<const Point> targets, const Rational& epsilon);

// ---------------------------------------------------------------------------
// Simultaneous approximation

struct ConstructionTrace {
  unsigned k = 0;
  Rational epsilon;
  std::vector<Point> targets;
  std::size_t initial_length = 0;  // rho
  Point anchor;                    // the stabilizing element a
  std::size_t v1 = 0;
  MChain chain;
  Integer m0;
  Partition partition;
  std::vector<StageRecord> stages;
  std::vector<Point> terms;                               // theta_1..theta_n
  std::size_t n = 0;
  std::vector<Point> values;                              // [T^i]_n, i = 1..k
  std::vector<Rational> metric_distances;                 // d([T^i]_n, x_i)
  std::vector<std::vector<Rational>> seminorm_distances;  // ||[T^i]_n - x_i||_rho
};

struct SimultaneousConfig {
  Rational epsilon;
  std::vector<Point> targets;  // x_1..x_k
  IndexSet index_set = IndexSet::all();
  std::size_t term_cap = kDefaultTermCap;
};

/// Extends the prefix so that some n in the index set satisfies
/// d([T^i]_n, x_i) < eps for every i = 1..k at once. Requires a lattice ground
/// set and 0 < eps < 1/2. Throws BudgetExceeded (reporting m_0) when the
/// required length exceeds the term cap.
ConstructionTrace construct_simultaneous(const Space& space, const GroundSet& ground,
                                         std::span<const Point> prefix, const SimultaneousConfig& config);

struct PlanEntry {
  std::vector<Point> targets;
  Rational precision;
};

struct PlanResult {
  std::vector<Point> terms;
  std::vector<std::size_t> schedule;
  std::vector<ConstructionTrace> traces;
};

/// Runs the simultaneous construction for each plan entry in turn on a
/// growing prefix. Entries use eps = min(precision, 49/100).
PlanResult run_plan(const Space& space, const GroundSet& ground, std::span<const PlanEntry> plan,
                    const IndexSet& index_set, std::size_t term_cap = kDefaultTermCap);

/// Recomputes [T^i]_n and the distances of a trace from its terms alone, with
/// literal running averages.
ConstructionTrace replay_values(const Space& space, ConstructionTrace trace);

// ---------------------------------------------------------------------------
// Second-iterate bound for [0, 1]-valued sequences

struct SecondIterateReport {
  std::size_t n = 0;
  Rational first;               // [T(a)]_n
  Rational second;              // [T^2(a)]_n
  bool hypothesis = false;      // first < 1/8
  bool conclusion = true;       // second < 15/16 (checked only under the hypothesis)
  std::size_t small_terms = 0;  // #{i <= n : a_i < 1/4}
  bool small_half = true;       // small_terms >= n/2
  Rational tail_mass;           // sum_{i > n/2} T^2_(n,i)
  bool tail_ok = true;          // tail_mass >= 1/8
  bool holds() const { return !hypothesis || (conclusion && small_half && tail_ok); }
};

SecondIterateReport second_iterate_check(std::span<const Rational> prefix, std::size_t n);
/// Same check with the row of T^2 taken from a kernel cache.
SecondIterateReport second_iterate_check(const Kernel& kernel, std::span<const Rational> prefix, std::size_t n);

}  // namespace cesaro
