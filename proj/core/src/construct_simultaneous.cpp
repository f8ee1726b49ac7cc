#include <algorithm>

#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/iterate.hpp"
#include "cesaro/kernel.hpp"

namespace cesaro {
namespace {

FinitePointSet initial_set(const Space& space, const GroundSet& ground, std::span<const Point> targets,
                           const Point& anchor) {
  Rational radius = 0;
  for (const auto& x : targets) radius = std::max<Rational>(radius, x.sup_norm());
  for (const auto& w : space.weights()) radius = std::max<Rational>(radius, 1 / w);
  FinitePointSet m0 = cube_corners(ground, radius);
  m0.insert(anchor);
  return m0;
}

bool stabilized(const IterateTracker& tracker, const Space& space, const Point& anchor, const Rational& halfwidth) {
  if (tracker.length() == 0) return false;
  for (unsigned i = 1; i <= tracker.k(); ++i) {
    if (!within_box(space, tracker.value(i) - anchor, halfwidth)) return false;
  }
  return true;
}

void fill_distances(const Space& space, ConstructionTrace& trace) {
  trace.metric_distances.clear();
  trace.seminorm_distances.clear();
  for (unsigned i = 0; i < trace.k; ++i) {
    const Point diff = trace.values[i] - trace.targets[i];
    trace.metric_distances.push_back(space.metric(trace.values[i], trace.targets[i]));
    std::vector<Rational> per;
    for (std::size_t rho = 1; rho <= space.dimension(); ++rho) per.push_back(space.seminorm(rho, diff));
    trace.seminorm_distances.push_back(std::move(per));
  }
}

}  // namespace

ConstructionTrace construct_simultaneous(const Space& space, const GroundSet& ground,
                                         std::span<const Point> prefix, const SimultaneousConfig& config) {
  const Rational& epsilon = config.epsilon;
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) throw PreconditionError("construction needs 0 < eps < 1/2");
  if (config.targets.empty()) throw PreconditionError("construction needs at least one target");
  if (!ground.is_lattice()) throw PreconditionError("construction needs a lattice ground set");
  if (ground.dimension() != space.dimension()) throw PreconditionError("ground set and space dimensions differ");
  require_dimension(prefix, space.dimension());
  require_dimension(config.targets, space.dimension());
  for (const auto& p : prefix) {
    if (!ground.contains(p)) throw PreconditionError("prefix term " + p.to_string() + " is not in the ground set");
  }

  ConstructionTrace trace;
  trace.k = static_cast<unsigned>(config.targets.size());
  trace.epsilon = epsilon;
  trace.targets = config.targets;
  trace.initial_length = prefix.size();
  trace.anchor = ground.nearest_to_origin();

  const FinitePointSet m0 = initial_set(space, ground, config.targets, trace.anchor);
  trace.chain = build_m_chain(space, ground, m0, epsilon, trace.k);

  const Integer cap(static_cast<unsigned long>(config.term_cap));
  Integer early = partition_threshold(space, trace.chain, 0);
  if (early >= cap) {
    throw BudgetExceeded("m_0 = " + early.get_str() + " exceeds the term cap " + cap.get_str());
  }

  IterateTracker tracker(trace.k, space.dimension());
  tracker.push_all(prefix);
  trace.terms.assign(prefix.begin(), prefix.end());
  const Rational halfwidth =
      inscribed_box_halfwidth(delta(epsilon / 6) / 4 / Rational(static_cast<unsigned long>(trace.k)));
  while (!stabilized(tracker, space, trace.anchor, halfwidth)) {
    if (tracker.length() >= config.term_cap) {
      throw BudgetExceeded("stabilization did not finish within the term cap " + cap.get_str() +
                           " (m_0 without the stabilization term is " + early.get_str() + ")");
    }
    tracker.push(trace.anchor);
    trace.terms.push_back(trace.anchor);
  }
  trace.v1 = tracker.length();

  trace.m0 = partition_threshold(space, trace.chain, trace.v1);
  Integer m = config.index_set.next_above(trace.m0);
  if (m > cap) {
    throw BudgetExceeded("m_0 = " + trace.m0.get_str() + " requires n = " + m.get_str() +
                         " terms, above the term cap " + cap.get_str());
  }
  trace.partition = choose_partition(m.get_ui(), trace.chain.intervals);
  if (!(trace.partition.v > trace.v1)) throw CertificationFailure("partition v does not exceed v_1");

  while (trace.terms.size() < trace.partition.v) trace.terms.push_back(trace.anchor);

  AssignResult assigned = assign_blocks(space, trace.terms, trace.chain, trace.partition, trace.targets, epsilon);
  trace.terms.insert(trace.terms.end(), assigned.terms.begin(), assigned.terms.end());
  trace.stages = std::move(assigned.stages);
  trace.n = trace.terms.size();
  if (trace.n != trace.partition.m) throw CertificationFailure("assembled length differs from m");
  if (!config.index_set.contains(Integer(static_cast<unsigned long>(trace.n)))) {
    throw CertificationFailure("final index is not in the index set");
  }

  IterateTracker final_values(trace.k, space.dimension());
  final_values.push_all(trace.terms);
  for (unsigned i = 1; i <= trace.k; ++i) trace.values.push_back(final_values.value(i));
  fill_distances(space, trace);
  for (unsigned i = 0; i < trace.k; ++i) {
    if (!(trace.metric_distances[i] < epsilon)) {
      throw CertificationFailure("iterate " + std::to_string(i + 1) + " ends at distance " +
                                 rational::to_string(trace.metric_distances[i]) + ", not below eps");
    }
  }
  return trace;
}

PlanResult run_plan(const Space& space, const GroundSet& ground, std::span<const PlanEntry> plan,
                    const IndexSet& index_set, std::size_t term_cap) {
  PlanResult out;
  const Rational ceiling(49, 100);
  for (const auto& entry : plan) {
    if (entry.precision <= 0) throw PreconditionError("plan precision must be positive");
    SimultaneousConfig config{std::min(entry.precision, ceiling), entry.targets, index_set, term_cap};
    ConstructionTrace trace;
    try {
      trace = construct_simultaneous(space, ground, out.terms, config);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("plan entry " + std::to_string(out.traces.size() + 1) + ": " + e.what());
    }
    if (!out.schedule.empty() && trace.n <= out.schedule.back()) {
      throw CertificationFailure("plan schedule is not strictly increasing");
    }
    if (!(trace.metric_distances.size() == entry.targets.size())) throw CertificationFailure("missing distances");
    for (const auto& d : trace.metric_distances) {
      if (!(d < entry.precision)) throw CertificationFailure("plan entry not met at its precision");
    }
    out.terms = trace.terms;
    out.schedule.push_back(trace.n);
    out.traces.push_back(std::move(trace));
  }
  return out;
}

ConstructionTrace replay_values(const Space& space, ConstructionTrace trace) {
  require_dimension(trace.terms, space.dimension());
  trace.n = trace.terms.size();
  trace.values.clear();
  for (unsigned i = 1; i <= trace.k; ++i) trace.values.push_back(apply_iterate_oracle(i, trace.terms, trace.n));
  fill_distances(space, trace);
  return trace;
}

namespace {

SecondIterateReport second_iterate_from_row(const KernelRow& row, std::span<const Rational> prefix, std::size_t n) {
  SecondIterateReport r;
  r.n = n;
  r.first = 0;
  r.second = 0;
  r.tail_mass = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& a = prefix[i];
    if (a < 0 || a > 1) throw PreconditionError("prefix values must lie in [0, 1]");
    r.first += a;
    r.second += row[i] * a;
    if (a < Rational(1, 4)) ++r.small_terms;
    if (2 * (i + 1) > n) r.tail_mass += row[i];
  }
  r.first /= Rational(static_cast<unsigned long>(n));
  r.hypothesis = r.first < Rational(1, 8);
  if (r.hypothesis) {
    r.conclusion = r.second < Rational(15, 16);
    r.small_half = 2 * r.small_terms >= n;
    r.tail_ok = r.tail_mass >= Rational(1, 8);
  }
  return r;
}

}  // namespace

SecondIterateReport second_iterate_check(std::span<const Rational> prefix, std::size_t n) {
  if (n < 1 || n > prefix.size()) throw PreconditionError("index outside the prefix");
  return second_iterate_from_row(iterate_row(2, n), prefix, n);
}

SecondIterateReport second_iterate_check(const Kernel& kernel, std::span<const Rational> prefix, std::size_t n) {
  if (n < 1 || n > prefix.size()) throw PreconditionError("index outside the prefix");
  return second_iterate_from_row(*kernel.row(2, n), prefix, n);
}

}  // namespace cesaro
