#include <iostream>

#include "CLI11.hpp"
#include "cesaro/errors.hpp"
#include "commands.hpp"

using namespace cesaro::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact Cesaro-iterate kernels and constructive simultaneous approximation"};
  app.require_subcommand(1);

  KernelOptions kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "Write rows 1..n of T^k");
  kernel_cmd->add_option("--k", kernel.k, "Iterate order")->required()->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--n", kernel.n, "Number of rows")->required()->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--format", kernel.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  kernel_cmd->add_option("--output,-o", kernel.output, "Output file (default stdout)");

  AuditOptions audit;
  auto* audit_cmd = app.add_subcommand("audit", "Run an exact audit suite");
  audit_cmd->add_option("--suite", audit.suite, "Suite name")->required()->check(CLI::IsMember(audit_suites()));
  audit_cmd->add_option("--k-max", audit.k_max, "Largest iterate order")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--n-max", audit.n_max, "Largest row index");
  audit_cmd->add_option("--samples", audit.samples, "Random instances");
  audit_cmd->add_option("--a-max", audit.a_max, "Largest recurrence step (recurrence suite)");
  audit_cmd->add_option("--d-max", audit.d_max, "Largest dimension (oracle suite)");
  audit_cmd->add_option("--seed", audit.seed, "RNG seed");
  audit_cmd->add_option("--output,-o", audit.output, "Report JSON path");
  audit_cmd->add_flag("--timing", audit.timing, "Record wall time in the report");

  ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "Run a construction from a JSON config");
  construct_cmd->add_option("--config,-c", construct.config, "Config file")->required();
  construct_cmd->add_option("--mode", construct.mode, "dense, extend, simultaneous or plan (overrides config)")
      ->check(CLI::IsMember({"dense", "extend", "simultaneous", "plan"}));
  construct_cmd->add_option("--trace", construct.trace, "Trace JSON path (overrides config)");
  construct_cmd->add_option("--trajectory", construct.trajectory, "Trajectory CSV path (overrides config)");

  ReplayOptions replay;
  auto* replay_cmd = app.add_subcommand("replay", "Recompute the distances of a stored trace");
  replay_cmd->add_option("--trace", replay.trace, "simultaneous-trace or plan-trace JSON")->required();
  replay_cmd->add_option("--config,-c", replay.config, "Config supplying the space and index set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kernel_cmd) return run_kernel(kernel, std::cout);
    if (*audit_cmd) return run_audit(audit, std::cout);
    if (*construct_cmd) return run_construct(construct, std::cout);
    if (*replay_cmd) return run_replay(replay, std::cout);
  } catch (const cesaro::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const cesaro::CertificationFailure& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kFailure;
  } catch (const cesaro::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
