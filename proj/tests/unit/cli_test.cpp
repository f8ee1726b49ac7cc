#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cesaro/serialize.hpp"

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cesaro_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" CESARO_CLI_PATH "' " + args + " >'" +
                            path("stdout.txt") + "' 2>'" + path("stderr.txt") + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

TEST_F(Cli, KernelCsv) {
  ASSERT_EQ(run("kernel --k 2 --n 3"), 0);
  const std::string out = read("stdout.txt");
  EXPECT_NE(out.find("2,3,1,11/18,"), std::string::npos);
  EXPECT_NE(out.find("2,3,2,5/18,"), std::string::npos);
  EXPECT_NE(out.find("2,3,3,1/9,"), std::string::npos);
  ASSERT_EQ(run("kernel --k 1 --n 2"), 0);
  EXPECT_EQ(read("stdout.txt"), "k,n,m,exact,decimal\n1,1,1,1,1\n1,2,1,1/2,0.5\n1,2,2,1/2,0.5\n");
}

TEST_F(Cli, KernelJsonRoundTrips) {
  ASSERT_EQ(run("kernel --k 3 --n 6 --format json --output rows.json"), 0);
  const auto rows = cesaro::kernel_rows_from_json(read("rows.json"));
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[5], cesaro::iterate_row(3, 6));
}

TEST_F(Cli, CacheBudgetFromEnvironment) {
  EXPECT_EQ(run("kernel --k 3 --n 5", "CESARO_CACHE_BUDGET=2:10"), 2);
  EXPECT_EQ(run("kernel --k 2 --n 11", "CESARO_CACHE_BUDGET=10"), 2);
  EXPECT_EQ(run("kernel --k 2 --n 10", "CESARO_CACHE_BUDGET=10"), 0);
  EXPECT_EQ(run("kernel --k 2 --n 3", "CESARO_CACHE_BUDGET=junk"), 1);
}

TEST_F(Cli, KernelAuditPasses) {
  EXPECT_EQ(run("audit --suite kernel --k-max 4 --n-max 120 --output kernel.json"), 0);
  const auto report = cesaro::report_from_json(read("kernel.json"));
  EXPECT_EQ(report.failed, 0u);
  EXPECT_GT(report.checked, 0u);
}

TEST_F(Cli, SecondIterateAuditIsDeterministic) {
  ASSERT_EQ(run("audit --suite second-iterate --samples 500 --seed 7 --output a.json"), 0);
  ASSERT_EQ(run("audit --suite second-iterate --samples 500 --seed 7 --output b.json"), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  ASSERT_EQ(run("audit --suite second-iterate --samples 20 --seed 8 --output c.json"), 0);
  EXPECT_NE(read("a.json"), read("c.json"));
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("audit --suite nonsense"), 1);
  EXPECT_NE(read("stderr.txt").find("nonsense"), std::string::npos);
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("kernel --k 0 --n 3"), 1);
  EXPECT_EQ(run("construct --config missing.json"), 1);
  write("bad.json", "{\"schema_version\": 2}");
  EXPECT_EQ(run("construct --config bad.json --mode dense"), 1);
  write("eps.json", R"({"schema_version": 1, "epsilon": 0.3, "targets": [["0"]]})");
  EXPECT_EQ(run("construct --config eps.json --mode simultaneous"), 1);
}

TEST_F(Cli, ExtendConstantCase) {
  write("cfg.json", R"({
    "schema_version": 1,
    "epsilon": "1/4",
    "k": 1,
    "prefix": [["2"], ["2"], ["2"]],
    "extend": {"atoms": [{"coefficient": "1", "point": ["2"]}]}
  })");
  ASSERT_EQ(run("construct --config cfg.json --mode extend --trace t.json --trajectory t.csv"), 0);
  const std::string out = read("stdout.txt");
  EXPECT_NE(out.find("\n4 "), std::string::npos) << out;
  EXPECT_NE(out.find("0 (0)"), std::string::npos) << out;
  const std::string trace = read("t.json");
  EXPECT_NE(trace.find("\"extend-trace\""), std::string::npos);
  EXPECT_NE(trace.find("\"n0\": 4,"), std::string::npos);
  EXPECT_EQ(read("t.csv").substr(0, 4), "n,k,");
}

TEST_F(Cli, SimultaneousOverBudgetReportsMZero) {
  EXPECT_EQ(run("construct --config '" CESARO_CONFIG_DIR "/simultaneous_k2.json' --trace t.json"), 2);
  EXPECT_NE(read("stderr.txt").find("m_0 = "), std::string::npos);
  EXPECT_FALSE(fs::exists(path("t.json")));
}

TEST_F(Cli, SimultaneousTraceReplays) {
  write("cfg.json", R"({
    "schema_version": 1,
    "mode": "simultaneous",
    "index_set": {"kind": "progression", "offset": 3, "stride": 3},
    "epsilon": "1/4",
    "targets": [["-2"]],
    "prefix": [["5"], ["5"]],
    "output": {"trace": "trace.json", "trajectory": "traj.csv", "summary": "summary.txt"}
  })");
  ASSERT_EQ(run("construct --config cfg.json"), 0);
  const std::string summary = read("summary.txt");
  EXPECT_EQ(read("stdout.txt"), summary);
  EXPECT_NE(summary.find("(in index set)"), std::string::npos);
  const auto trace = cesaro::trace_from_json(read("trace.json"));
  EXPECT_EQ(trace.n % 3, 0u);
  ASSERT_EQ(run("replay --trace trace.json --config cfg.json"), 0);
  EXPECT_NE(read("stdout.txt").find("replay matches stored distances: yes"), std::string::npos);
  EXPECT_NE(read("stdout.txt").find(cesaro::rational::to_string(trace.metric_distances[0])), std::string::npos);
}

TEST_F(Cli, ReplayDetectsTampering) {
  write("cfg.json", R"({"schema_version": 1, "epsilon": "1/4", "targets": [["1"]]})");
  ASSERT_EQ(run("construct --config cfg.json --mode simultaneous --trace trace.json"), 0);
  auto trace = cesaro::trace_from_json(read("trace.json"));
  trace.terms.back() = cesaro::Point{cesaro::Rational(1000)};
  write("tampered.json", cesaro::trace_to_json(trace));
  EXPECT_EQ(run("replay --trace tampered.json"), 3);
  EXPECT_NE(read("stdout.txt").find("replay matches stored distances: no"), std::string::npos);
}

TEST_F(Cli, DenseTableIsMonotone) {
  write("cfg.json", R"({"schema_version": 1, "dense": {"growth": "power", "base": 4, "length": 200}})");
  ASSERT_EQ(run("construct --config cfg.json --mode dense --trace d.json --trajectory d.csv"), 0);
  EXPECT_NE(read("stdout.txt").find("nonincreasing in prefix length: yes"), std::string::npos);
  EXPECT_NE(read("d.json").find("empirical surrogate"), std::string::npos);
}

TEST_F(Cli, ConstructOutputsAreDeterministic) {
  write("cfg.json", R"({"schema_version": 1, "mode": "simultaneous", "epsilon": "1/3", "targets": [["2"]]})");
  ASSERT_EQ(run("construct --config cfg.json --trace a.json --trajectory a.csv"), 0);
  ASSERT_EQ(run("construct --config cfg.json --trace b.json --trajectory b.csv"), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_EQ(read("a.csv"), read("b.csv"));
}

}  // namespace
