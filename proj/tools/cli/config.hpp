#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/construct.hpp"
#include "cesaro/kernel.hpp"
#include "cesaro/space.hpp"

namespace cesaro::cli {

struct DenseSettings {
  std::vector<Rational> enumeration;
  std::string growth = "power";  // unit | linear | power | tower
  unsigned long base = 4;
  std::size_t length = 2000;
  std::vector<unsigned> ks{1, 2};
  std::vector<Point> targets;  // defaults to the first five enumerated values
  std::vector<std::size_t> checkpoints;
  std::optional<Rational> tolerance;  // if set, a final min-distance at or above it fails the run
};

struct Config {
  Space space{1};
  GroundSet ground = GroundSet::lattice(1, Rational(1));
  IndexSet index_set = IndexSet::all();
  std::optional<Rational> epsilon;
  std::optional<unsigned> k;
  std::vector<Point> targets;
  std::vector<Point> prefix;
  ConvexWitness atoms;
  std::vector<PlanEntry> plan;
  DenseSettings dense;
  KernelBudget kernel_budget;
  std::size_t term_cap = kDefaultTermCap;
  std::uint64_t seed = 1;
  std::string trace_path;
  std::string trajectory_path;
  std::string summary_path;
  std::size_t trajectory_window = 2048;
  std::string mode;
};

/// Parses the JSON config document. Throws PreconditionError on any schema
/// violation.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

/// Applies CESARO_CACHE_BUDGET ("K:N" or "N") if set.
KernelBudget budget_from_env(KernelBudget budget);

}  // namespace cesaro::cli
