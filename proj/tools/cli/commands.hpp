#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cesaro::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kFailure = 3 };

struct KernelOptions {
  unsigned k = 1;
  std::size_t n = 1;
  std::string format = "csv";
  std::string output;  // empty: stdout
};

struct AuditOptions {
  std::string suite;
  unsigned k_max = 4;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> samples;
  std::size_t a_max = 6;
  std::size_t d_max = 3;
  std::uint64_t seed = 1;
  std::string output = "audit-report.json";
  bool timing = false;
};

struct ConstructOptions {
  std::string config;
  std::string mode;
  std::string trace;
  std::string trajectory;
};

struct ReplayOptions {
  std::string trace;
  std::string config;
};

/// Each command returns its exit code; library errors propagate as exceptions
/// and are mapped to exit codes by the caller.
int run_kernel(const KernelOptions& options, std::ostream& out);
int run_audit(const AuditOptions& options, std::ostream& out);
int run_construct(const ConstructOptions& options, std::ostream& out);
int run_replay(const ReplayOptions& options, std::ostream& out);

/// Suite names accepted by run_audit.
const std::vector<std::string>& audit_suites();

}  // namespace cesaro::cli
