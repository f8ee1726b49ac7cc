#include <gtest/gtest.h>

#include <numeric>

#include "cesaro/errors.hpp"
#include "cesaro/construct.hpp"
#include "oracles.hpp"

namespace cesaro {
namespace {

using rational::frac;

Point scalar(const Rational& v) { return Point{v}; }

ConvexWitness half_zero_one() { return {{frac(1, 2), scalar(0)}, {frac(1, 2), scalar(1)}}; }

TEST(Dense, SignedCalkinWilfOrder) {
  const auto q = signed_calkin_wilf(11);
  const std::vector<Rational> expected{Rational(0), Rational(1),  Rational(-1), frac(1, 2),  frac(-1, 2), Rational(2),
                                       Rational(-2), frac(1, 3), frac(-1, 3), frac(3, 2), frac(-3, 2)};
  EXPECT_EQ(q, expected);
  const auto many = signed_calkin_wilf(500);
  for (std::size_t j = 0; j < many.size(); ++j) EXPECT_LE(rational::abs(many[j]), Rational(static_cast<unsigned long>(j + 1)));
}

TEST(Dense, UnitAndLinearBlocks) {
  DenseSequence unit({Rational(0), Rational(1), Rational(-1)}, unit_growth());
  EXPECT_EQ(unit.prefix(3), (SeqPrefix{scalar(0), scalar(1), scalar(-1)}));
  const Rational a = frac(1, 3), b = frac(-2, 5), c = Rational(7);
  DenseSequence linear({a, b, c}, linear_growth());
  EXPECT_EQ(linear.prefix(6), (SeqPrefix{scalar(a), scalar(b), scalar(b), scalar(c), scalar(c), scalar(c)}));
  EXPECT_EQ(linear.block_of(5), (std::pair<std::size_t, Rational>{3, c}));
  EXPECT_THROW(linear.prefix(7), PreconditionError);
}

TEST(Dense, GrowthFunctions) {
  EXPECT_EQ(power_growth(4)(3), Integer(64));
  EXPECT_EQ(tower_growth()(1), Integer(1));
  EXPECT_EQ(tower_growth()(2), Integer(256));
  DenseSequence tower(signed_calkin_wilf(4), tower_growth());
  const auto prefix = tower.prefix(300);
  EXPECT_EQ(prefix[0], scalar(0));
  EXPECT_EQ(prefix[256], scalar(1));
  EXPECT_EQ(prefix[257], scalar(-1));
}

TEST(Extend, RoundCounts) {
  const std::vector<Rational> lambdas{frac(1, 2), frac(1, 2)};
  EXPECT_EQ(round_counts(lambdas, 61), (std::vector<std::size_t>{31, 30}));
  const std::vector<Rational> thirds{frac(1, 3), frac(1, 3), frac(1, 3)};
  for (std::size_t m = 1; m <= 40; ++m) {
    const auto counts = round_counts(thirds, m);
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::size_t{0}), m);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_LE(rational::abs(thirds[i] - frac(static_cast<unsigned long>(counts[i]), static_cast<unsigned long>(m))),
                frac(1, static_cast<unsigned long>(m)));
    }
  }
}

TEST(Extend, SingleAtomOnEmptyPrefix) {
  Space space(1);
  const ConvexWitness target{{Rational(1), scalar(3)}};
  const ExtendResult r = extend_to_target(space, {}, target, frac(1, 10), 1);
  EXPECT_EQ(r.n0, 1u);
  EXPECT_EQ(r.distance, 0);
  EXPECT_EQ(r.terms, (std::vector<Point>{scalar(3)}));
}

TEST(Extend, SingleAtomAfterConstantPrefix) {
  Space space(1);
  const std::vector<Point> prefix(5, scalar(3));
  const ExtendResult r = extend_to_target(space, prefix, {{Rational(1), scalar(3)}}, frac(1, 4), 2);
  EXPECT_EQ(r.n0, prefix.size() + 1);
  EXPECT_EQ(r.distance, 0);
}

TEST(Extend, HalfwayTarget) {
  Space space(1);
  for (unsigned k : {1u, 2u}) {
    const Rational eps = frac(1, 10);
    const ExtendResult r = extend_to_target(space, {}, half_zero_one(), eps, k);
    std::vector<Point> terms = r.terms;
    ASSERT_EQ(terms.size(), r.n0);
    const Point value = oracle::averaged(k, terms, r.n0);
    EXPECT_EQ(space.metric(value, scalar(frac(1, 2))), r.distance);
    EXPECT_LT(r.distance, eps);
    EXPECT_LT(space.metric(r.x_prime, scalar(frac(1, 2))), 2 * eps / 3);
    EXPECT_LT(r.distance_prime, eps / 3);
    if (k == 2) EXPECT_GT(r.n0, 1u);
  }
}

TEST(Extend, RejectsBadWitness) {
  GroundSet z = GroundSet::lattice(1, Rational(1));
  EXPECT_THROW(validate_witness({{frac(1, 2), scalar(0)}}, z), PreconditionError);
  EXPECT_THROW(validate_witness({{Rational(1), scalar(frac(1, 2))}}, z), PreconditionError);
  EXPECT_THROW(validate_witness({{frac(3, 2), scalar(0)}, {frac(-1, 2), scalar(1)}}, z), PreconditionError);
  EXPECT_NO_THROW(validate_witness(half_zero_one(), z));
}

TEST(Chain, IntervalsForUnitSegment) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  FinitePointSet m0({scalar(-1), scalar(1)});
  MChain chain = build_m_chain(space, z, m0, frac(1, 4), 1);
  ASSERT_EQ(chain.intervals.size(), 1u);
  EXPECT_EQ(chain.intervals[0].first, frac(1, 48));
  EXPECT_EQ(chain.intervals[0].second, frac(1, 24));
  ASSERT_EQ(chain.sets.size(), 2u);
  for (const auto& p : chain.sets[0].points()) EXPECT_TRUE(chain.sets[1].contains(p));
}

TEST(Chain, NestedForTwoStages) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  FinitePointSet m0({scalar(-5), scalar(5), scalar(0)});
  MChain chain = build_m_chain(space, z, m0, frac(3, 10), 2);
  ASSERT_EQ(chain.sets.size(), 3u);
  for (std::size_t i = 1; i < chain.sets.size(); ++i) {
    for (const auto& p : chain.sets[i - 1].points()) EXPECT_TRUE(chain.sets[i].contains(p));
    EXPECT_LT(chain.intervals[i - 1].first, chain.intervals[i - 1].second);
  }
}

TEST(Partition, WorkedExample) {
  const std::vector<std::pair<Rational, Rational>> intervals{{frac(1, 48), frac(1, 24)}};
  const Partition part = choose_partition(192, intervals);
  EXPECT_EQ(part.lambdas, (std::vector<std::size_t>{4}));
  EXPECT_EQ(part.v, 188u);
  EXPECT_EQ(part.m, 192u);
  EXPECT_EQ(part.block_end(1), 192u);
  EXPECT_EQ(choose_partition(192, intervals).lambdas, part.lambdas);
}

TEST(Partition, CoefficientsStayInIntervals) {
  const std::vector<std::pair<Rational, Rational>> intervals{
      {frac(1, 60), frac(1, 30)}, {frac(1, 48), frac(1, 24)}, {frac(1, 100), frac(1, 50)}};
  for (std::size_t m = 201; m <= 2000; m += 37) {
    const Partition part = choose_partition(m, intervals);
    EXPECT_GT(2 * part.v, m);
    EXPECT_EQ(part.block_end(3), m);
    for (std::size_t i = 1; i <= 3; ++i) {
      const Rational g = partition_gamma(part, i);
      EXPECT_GE(g, intervals[i - 1].first);
      EXPECT_LE(g, intervals[i - 1].second);
    }
  }
  EXPECT_THROW(choose_partition(10, intervals), PreconditionError);
}

TEST(Simultaneous, SingleTargetAllNaturals) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  SimultaneousConfig cfg{frac(1, 4), {scalar(frac(7, 2))}, IndexSet::all(), kDefaultTermCap};
  const ConstructionTrace trace = construct_simultaneous(space, z, {}, cfg);
  ASSERT_EQ(trace.terms.size(), trace.n);
  EXPECT_EQ(trace.initial_length, 0u);
  const Point value = oracle::averaged(1, trace.terms, trace.n);
  EXPECT_EQ(value, trace.values[0]);
  EXPECT_LT(space.metric(value, scalar(frac(7, 2))), frac(1, 4));

  ASSERT_EQ(trace.stages.size(), 1u);
  const StageRecord& st = trace.stages[0];
  Rational gamma_sum = 0;
  for (const auto& g : st.gamma) gamma_sum += g;
  EXPECT_EQ(gamma_sum, st.phi);
  for (const auto& r : st.residuals) {
    EXPECT_LT(rational::abs(r), frac(2, static_cast<unsigned long>(trace.partition.v)));
  }
  for (std::size_t rho = 0; rho < st.block_peak.size(); ++rho) EXPECT_LE(st.block_peak[rho], st.block_bound[rho]);
  for (const auto& s : st.end_seminorm_distances) EXPECT_LT(s, frac(1, 12));
  for (const auto& theta : trace.terms) EXPECT_TRUE(z.contains(theta));
}

TEST(Simultaneous, ReachableZeroTarget) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  SimultaneousConfig cfg{frac(1, 4), {scalar(0)}, IndexSet::all(), kDefaultTermCap};
  const std::vector<Point> prefix{scalar(4), scalar(-2)};
  const ConstructionTrace trace = construct_simultaneous(space, z, prefix, cfg);
  EXPECT_EQ(trace.initial_length, 2u);
  EXPECT_EQ(std::vector<Point>(trace.terms.begin(), trace.terms.begin() + 2), prefix);
  const ConstructionTrace replayed = replay_values(space, trace);
  EXPECT_EQ(replayed.metric_distances, trace.metric_distances);
  EXPECT_LT(trace.stages[0].end_seminorm_distances[0], frac(1, 12));
}

TEST(Simultaneous, IndexSetIsRespected) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  SimultaneousConfig cfg{frac(1, 4), {scalar(frac(7, 2))}, IndexSet::progression(Integer(7), Integer(7)),
                         kDefaultTermCap};
  const ConstructionTrace trace = construct_simultaneous(space, z, {}, cfg);
  EXPECT_EQ(trace.n % 7, 0u);
  EXPECT_LT(trace.metric_distances[0], frac(1, 4));
}

TEST(Simultaneous, TwoTargetsReportMZeroWhenOverBudget) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  SimultaneousConfig cfg{frac(3, 10), {scalar(0), scalar(5)}, IndexSet::progression(Integer(7), Integer(7)),
                         kDefaultTermCap};
  try {
    construct_simultaneous(space, z, {}, cfg);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("m_0 = "), std::string::npos);
  }
}

TEST(Simultaneous, RejectsBadEpsilon) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  SimultaneousConfig cfg{frac(1, 2), {scalar(0)}, IndexSet::all(), kDefaultTermCap};
  EXPECT_THROW(construct_simultaneous(space, z, {}, cfg), PreconditionError);
}

TEST(Plan, SingleEntryMatchesDirectConstruction) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  const std::vector<PlanEntry> plan{{{scalar(1)}, Rational(1)}};
  const PlanResult result = run_plan(space, z, plan, IndexSet::all());
  SimultaneousConfig cfg{frac(49, 100), {scalar(1)}, IndexSet::all(), kDefaultTermCap};
  const ConstructionTrace direct = construct_simultaneous(space, z, {}, cfg);
  ASSERT_EQ(result.schedule.size(), 1u);
  EXPECT_EQ(result.schedule[0], direct.n);
  EXPECT_EQ(result.terms, direct.terms);
}

TEST(Plan, TwoSingleTargetEntriesIncrease) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  const std::vector<PlanEntry> plan{{{scalar(0)}, frac(1, 2)}, {{scalar(1)}, frac(1, 3)}};
  const IndexSet sevens = IndexSet::progression(Integer(7), Integer(7));
  const PlanResult result = run_plan(space, z, plan, sevens);
  ASSERT_EQ(result.schedule.size(), 2u);
  EXPECT_LT(result.schedule[0], result.schedule[1]);
  for (std::size_t n : result.schedule) EXPECT_EQ(n % 7, 0u);
  EXPECT_LT(space.metric(oracle::averaged(1, result.terms, result.schedule[0]), scalar(0)), frac(1, 2));
  EXPECT_LT(space.metric(oracle::averaged(1, result.terms, result.schedule[1]), scalar(1)), frac(1, 3));
}

TEST(SecondIterate, ZeroAndOneSequences) {
  const std::vector<Rational> zeros(50, Rational(0));
  for (std::size_t n = 1; n <= 50; ++n) {
    const auto r = second_iterate_check(zeros, n);
    EXPECT_TRUE(r.hypothesis);
    EXPECT_EQ(r.second, 0);
    EXPECT_TRUE(r.holds());
  }
  const std::vector<Rational> ones(50, Rational(1));
  const auto r = second_iterate_check(ones, 40);
  EXPECT_FALSE(r.hypothesis);
  EXPECT_TRUE(r.holds());
}

TEST(SecondIterate, HalfZerosHalfOnesIsVacuous) {
  std::vector<Rational> a(40, Rational(0));
  for (std::size_t i = 20; i < 40; ++i) a[i] = 1;
  const auto r = second_iterate_check(a, 40);
  EXPECT_GE(r.first, frac(1, 8));
  EXPECT_FALSE(r.hypothesis);
  Kernel kernel;
  const auto cached = second_iterate_check(kernel, a, 40);
  EXPECT_EQ(cached.first, r.first);
  EXPECT_EQ(cached.second, r.second);
}

}  // namespace
}  // namespace cesaro
