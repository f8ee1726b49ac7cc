#pragma once

#include <string>
#include <vector>

#include "cesaro/audit.hpp"
#include "cesaro/construct.hpp"
#include "cesaro/kernel.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

inline constexpr int kSchemaVersion = 1;

/// Documents are pretty-printed JSON with a fixed key order. Every rational is
/// written as {"exact": "p/q", "decimal": "..."}; only "exact" is read back.

std::string report_to_json(const AuditReport& report, bool include_timing = false);
AuditReport report_from_json(const std::string& text);

std::string trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const std::string& text);

std::string plan_to_json(const PlanResult& plan);
PlanResult plan_from_json(const std::string& text);

std::string extend_to_json(const ExtendResult& result, const ConvexWitness& target, const Rational& epsilon,
                           unsigned k, std::size_t prefix_length);

std::string density_to_json(const DensityTable& table, const std::string& label);

/// Long format, header "k,n,m,exact,decimal", rows n = 1..n_max.
std::string kernel_csv(const Kernel& kernel, unsigned k, std::size_t n_max);
/// {"schema_version", "k", "rows": [["1"], ["1/2", "1/2"], ...]}
std::string kernel_json(const Kernel& kernel, unsigned k, std::size_t n_max);
std::vector<KernelRow> kernel_rows_from_json(const std::string& text);

/// Columns n, k, coord_i and coord_i_decimal for each coordinate, target_id,
/// metric_distance, metric_distance_decimal. One row per (n, j) for n in
/// `indices`, with [T^orders[j]]_n measured against targets[j] (target_id j+1).
std::string trajectory_csv(const Space& space, std::span<const Point> terms, std::span<const unsigned> orders,
                           std::span<const Point> targets, std::span<const std::size_t> indices);

/// Powers of two below `from`, then every index from `from` to n.
std::vector<std::size_t> trajectory_indices(std::size_t from, std::size_t n);

}  // namespace cesaro
