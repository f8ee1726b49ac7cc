#include <gtest/gtest.h>

#include "cesaro/errors.hpp"
#include "cesaro/serialize.hpp"

namespace cesaro {
namespace {

using rational::frac;

TEST(Serialize, KernelCsvRows) {
  Kernel kernel;
  const std::string csv = kernel_csv(kernel, 2, 3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,n,m,exact,decimal");
  EXPECT_NE(csv.find("2,3,1,11/18,0.611111111111111\n2,3,2,5/18,0.277777777777778\n2,3,3,1/9,0.111111111111111\n"),
            std::string::npos);
  EXPECT_EQ(kernel_csv(kernel, 1, 2), "k,n,m,exact,decimal\n1,1,1,1,1\n1,2,1,1/2,0.5\n1,2,2,1/2,0.5\n");
}

TEST(Serialize, KernelJsonRoundTrip) {
  Kernel kernel;
  for (unsigned k : {1u, 3u}) {
    const auto rows = kernel_rows_from_json(kernel_json(kernel, k, 12));
    ASSERT_EQ(rows.size(), 12u);
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(rows[n - 1], *kernel.row(k, n));
  }
}

TEST(Serialize, ReportRoundTrip) {
  AuditReport report;
  report.suite = "demo";
  report.param("seed", "7");
  report.record("a", true, "n=1", "1", "1");
  report.record("a", false, "n=2", "3/2", "1");
  report.skip(2);
  report.notes.push_back("note");
  report.wall_seconds = 1.5;
  const std::string text = report_to_json(report);
  EXPECT_EQ(text.find("wall_seconds"), std::string::npos);
  const AuditReport back = report_from_json(text);
  EXPECT_EQ(back.suite, "demo");
  EXPECT_EQ(back.parameters, report.parameters);
  EXPECT_EQ(back.checked, 2u);
  EXPECT_EQ(back.failed, 1u);
  EXPECT_EQ(back.skipped, 2u);
  ASSERT_EQ(back.counterexamples.size(), 1u);
  EXPECT_EQ(back.counterexamples[0].lhs, "3/2");
  EXPECT_EQ(report_to_json(back), text);
  EXPECT_NE(report_to_json(report, true).find("wall_seconds"), std::string::npos);
}

TEST(Serialize, WrongKindIsRejected) {
  Kernel kernel;
  EXPECT_THROW(report_from_json(kernel_json(kernel, 1, 2)), PreconditionError);
  EXPECT_THROW(trace_from_json("not json"), PreconditionError);
}

TEST(Serialize, TraceRoundTripIsByteExact) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  SimultaneousConfig cfg{frac(1, 4), {Point{Rational(0)}}, IndexSet::all(), kDefaultTermCap};
  const std::vector<Point> prefix{Point{Rational(3)}};
  const ConstructionTrace trace = construct_simultaneous(space, z, prefix, cfg);
  const std::string text = trace_to_json(trace);
  const ConstructionTrace back = trace_from_json(text);
  EXPECT_EQ(back.terms, trace.terms);
  EXPECT_EQ(back.metric_distances, trace.metric_distances);
  EXPECT_EQ(trace_to_json(back), text);
  EXPECT_EQ(replay_values(space, back).metric_distances, trace.metric_distances);
}

TEST(Serialize, PlanRoundTrip) {
  Space space(1);
  GroundSet z = GroundSet::lattice(1, Rational(1));
  const std::vector<PlanEntry> plan{{{Point{Rational(1)}}, Rational(1)}};
  const PlanResult result = run_plan(space, z, plan, IndexSet::all());
  const std::string text = plan_to_json(result);
  const PlanResult back = plan_from_json(text);
  EXPECT_EQ(back.schedule, result.schedule);
  EXPECT_EQ(back.terms, result.terms);
  EXPECT_EQ(plan_to_json(back), text);
}

TEST(Serialize, TrajectoryIndicesAndRows) {
  EXPECT_EQ(trajectory_indices(5, 7), (std::vector<std::size_t>{1, 2, 4, 5, 6, 7}));
  EXPECT_EQ(trajectory_indices(1, 3), (std::vector<std::size_t>{1, 2, 3}));
  Space space(1);
  const std::vector<Point> terms{Point{Rational(1)}, Point{Rational(0)}, Point{Rational(0)}};
  const std::vector<unsigned> orders{2};
  const std::vector<Point> targets{Point{Rational(0)}};
  const std::vector<std::size_t> indices{3};
  const std::string csv = trajectory_csv(space, terms, orders, targets, indices);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,k,coord_1,coord_1_decimal,target_id,metric_distance,metric_distance_decimal");
  EXPECT_NE(csv.find("\n3,2,11/18,0.611111111111111,1,11/58,"), std::string::npos);
}

}  // namespace
}  // namespace cesaro
