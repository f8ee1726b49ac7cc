#include "cesaro/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/iterate.hpp"
#include "json.hpp"

namespace cesaro {
namespace {

using json = nlohmann::ordered_json;

json num(const Rational& r) { return json{{"exact", rational::to_string(r)}, {"decimal", rational::to_decimal(r)}}; }

Rational read_num(const json& j) {
  if (j.is_object()) return rational::parse(j.at("exact").get<std::string>());
  if (j.is_string()) return rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw PreconditionError("expected an exact rational");
}

json point(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(num(c));
  return out;
}

Point read_point(const json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(read_num(c));
  return Point(std::move(coords));
}

json points(std::span<const Point> ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(point(p));
  return out;
}

std::vector<Point> read_points(const json& j) {
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(read_point(p));
  return out;
}

json nums(std::span<const Rational> rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(num(r));
  return out;
}

std::vector<Rational> read_nums(const json& j) {
  std::vector<Rational> out;
  for (const auto& r : j) out.push_back(read_num(r));
  return out;
}

json run_length(std::span<const Point> terms) {
  json out = json::array();
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    out.push_back(json{{"point", point(terms[i])}, {"count", j - i}});
    i = j;
  }
  return out;
}

std::vector<Point> read_run_length(const json& j) {
  std::vector<Point> out;
  for (const auto& run : j) {
    Point p = read_point(run.at("point"));
    std::size_t count = run.at("count").get<std::size_t>();
    out.insert(out.end(), count, p);
  }
  return out;
}

json parse_document(const std::string& text, const std::string& kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.value("schema_version", 0) != kSchemaVersion) throw PreconditionError("unsupported schema_version");
  if (!kind.empty() && doc.value("kind", std::string()) != kind) {
    throw PreconditionError("expected a \"" + kind + "\" document");
  }
  return doc;
}

json stage_json(const StageRecord& st) {
  json runs = json::array();
  for (const auto& r : st.runs) runs.push_back(json::array({r.atom, r.count}));
  return json{{"stage", st.stage},
              {"order", st.order},
              {"start", st.start},
              {"end", st.end},
              {"phi", num(st.phi)},
              {"target", point(st.target)},
              {"partial_sum", point(st.partial_sum)},
              {"x_prime", point(st.x_prime)},
              {"atoms", points(st.atoms)},
              {"g", nums(st.g)},
              {"rounds", st.rounds},
              {"runs", runs},
              {"gamma", nums(st.gamma)},
              {"residuals", nums(st.residuals)},
              {"end_value", point(st.end_value)},
              {"end_seminorm_distances", nums(st.end_seminorm_distances)},
              {"block_bound", nums(st.block_bound)},
              {"block_peak", nums(st.block_peak)}};
}

StageRecord read_stage(const json& j) {
  StageRecord st;
  st.stage = j.at("stage").get<unsigned>();
  st.order = j.at("order").get<unsigned>();
  st.start = j.at("start").get<std::size_t>();
  st.end = j.at("end").get<std::size_t>();
  st.phi = read_num(j.at("phi"));
  st.target = read_point(j.at("target"));
  st.partial_sum = read_point(j.at("partial_sum"));
  st.x_prime = read_point(j.at("x_prime"));
  st.atoms = read_points(j.at("atoms"));
  st.g = read_nums(j.at("g"));
  st.rounds = j.at("rounds").get<std::size_t>();
  for (const auto& r : j.at("runs")) st.runs.push_back({r.at(0).get<std::size_t>(), r.at(1).get<std::size_t>()});
  st.gamma = read_nums(j.at("gamma"));
  st.residuals = read_nums(j.at("residuals"));
  st.end_value = read_point(j.at("end_value"));
  st.end_seminorm_distances = read_nums(j.at("end_seminorm_distances"));
  st.block_bound = read_nums(j.at("block_bound"));
  st.block_peak = read_nums(j.at("block_peak"));
  return st;
}

json trace_body(const ConstructionTrace& t) {
  json sets = json::array();
  for (const auto& s : t.chain.sets) sets.push_back(points(s.points()));
  json intervals = json::array();
  for (const auto& [c, d] : t.chain.intervals) intervals.push_back(json::array({num(c), num(d)}));
  json stages = json::array();
  for (const auto& st : t.stages) stages.push_back(stage_json(st));
  json seminorms = json::array();
  for (const auto& per : t.seminorm_distances) seminorms.push_back(nums(per));
  return json{{"k", t.k},
              {"epsilon", num(t.epsilon)},
              {"targets", points(t.targets)},
              {"initial_length", t.initial_length},
              {"anchor", point(t.anchor)},
              {"v1", t.v1},
              {"chain",
               json{{"epsilon", num(t.chain.epsilon)},
                    {"k", t.chain.k},
                    {"sets", sets},
                    {"intervals", intervals},
                    {"radii", nums(t.chain.radii)},
                    {"scales", nums(t.chain.scales)}}},
              {"m0", t.m0.get_str()},
              {"partition", json{{"v", t.partition.v}, {"lambdas", t.partition.lambdas}, {"m", t.partition.m}}},
              {"stages", stages},
              {"n", t.n},
              {"values", points(t.values)},
              {"metric_distances", nums(t.metric_distances)},
              {"seminorm_distances", seminorms},
              {"terms", run_length(t.terms)}};
}

ConstructionTrace read_trace_body(const json& j) {
  ConstructionTrace t;
  t.k = j.at("k").get<unsigned>();
  t.epsilon = read_num(j.at("epsilon"));
  t.targets = read_points(j.at("targets"));
  t.initial_length = j.at("initial_length").get<std::size_t>();
  t.anchor = read_point(j.at("anchor"));
  t.v1 = j.at("v1").get<std::size_t>();
  const json& c = j.at("chain");
  t.chain.epsilon = read_num(c.at("epsilon"));
  t.chain.k = c.at("k").get<unsigned>();
  for (const auto& s : c.at("sets")) t.chain.sets.emplace_back(read_points(s));
  for (const auto& iv : c.at("intervals")) t.chain.intervals.emplace_back(read_num(iv.at(0)), read_num(iv.at(1)));
  t.chain.radii = read_nums(c.at("radii"));
  t.chain.scales = read_nums(c.at("scales"));
  t.m0 = Integer(j.at("m0").get<std::string>());
  const json& p = j.at("partition");
  t.partition.v = p.at("v").get<std::size_t>();
  t.partition.lambdas = p.at("lambdas").get<std::vector<std::size_t>>();
  t.partition.m = p.at("m").get<std::size_t>();
  for (const auto& st : j.at("stages")) t.stages.push_back(read_stage(st));
  t.n = j.at("n").get<std::size_t>();
  t.values = read_points(j.at("values"));
  t.metric_distances = read_nums(j.at("metric_distances"));
  for (const auto& per : j.at("seminorm_distances")) t.seminorm_distances.push_back(read_nums(per));
  t.terms = read_run_length(j.at("terms"));
  return t;
}

}  // namespace

std::string report_to_json(const AuditReport& report, bool include_timing) {
  json params = json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(json{{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}});
  json examples = json::array();
  for (const auto& c : report.counterexamples) {
    examples.push_back(json{{"check", c.check}, {"inputs", c.inputs}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "audit-report"},
           {"suite", report.suite},
           {"parameters", params},
           {"checked", report.checked},
           {"passed", report.passed},
           {"failed", report.failed},
           {"skipped", report.skipped},
           {"checks", checks},
           {"counterexamples", examples},
           {"notes", report.notes}};
  if (include_timing) doc["wall_seconds"] = report.wall_seconds;
  return doc.dump(2) + "\n";
}

AuditReport report_from_json(const std::string& text) {
  json doc = parse_document(text, "audit-report");
  AuditReport r;
  r.suite = doc.at("suite").get<std::string>();
  for (const auto& [k, v] : doc.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
  r.checked = doc.at("checked").get<std::uint64_t>();
  r.passed = doc.at("passed").get<std::uint64_t>();
  r.failed = doc.at("failed").get<std::uint64_t>();
  r.skipped = doc.at("skipped").get<std::uint64_t>();
  for (const auto& c : doc.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("checked").get<std::uint64_t>(),
                        c.at("failed").get<std::uint64_t>()});
  }
  for (const auto& c : doc.at("counterexamples")) {
    r.counterexamples.push_back({c.at("check").get<std::string>(), c.at("inputs").get<std::string>(),
                                 c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>()});
  }
  r.notes = doc.at("notes").get<std::vector<std::string>>();
  if (doc.contains("wall_seconds")) r.wall_seconds = doc.at("wall_seconds").get<double>();
  return r;
}

std::string trace_to_json(const ConstructionTrace& trace) {
  json doc{{"schema_version", kSchemaVersion}, {"kind", "simultaneous-trace"}};
  json body = trace_body(trace);
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

ConstructionTrace trace_from_json(const std::string& text) {
  return read_trace_body(parse_document(text, "simultaneous-trace"));
}

std::string plan_to_json(const PlanResult& plan) {
  json traces = json::array();
  for (const auto& t : plan.traces) traces.push_back(trace_body(t));
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "plan-trace"},
           {"schedule", plan.schedule},
           {"terms", run_length(plan.terms)},
           {"traces", traces}};
  return doc.dump(2) + "\n";
}

PlanResult plan_from_json(const std::string& text) {
  json doc = parse_document(text, "plan-trace");
  PlanResult p;
  p.schedule = doc.at("schedule").get<std::vector<std::size_t>>();
  p.terms = read_run_length(doc.at("terms"));
  for (const auto& t : doc.at("traces")) p.traces.push_back(read_trace_body(t));
  return p;
}

std::string extend_to_json(const ExtendResult& result, const ConvexWitness& target, const Rational& epsilon,
                           unsigned k, std::size_t prefix_length) {
  json atoms = json::array();
  for (const auto& a : target) atoms.push_back(json{{"coefficient", num(a.coefficient)}, {"point", point(a.point)}});
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "extend-trace"},
           {"k", k},
           {"epsilon", num(epsilon)},
           {"target", atoms},
           {"prefix_length", prefix_length},
           {"m", result.m},
           {"counts", result.counts},
           {"x_prime", point(result.x_prime)},
           {"n0", result.n0},
           {"distance", num(result.distance)},
           {"distance_prime", num(result.distance_prime)},
           {"rounding_distance", num(result.rounding_distance)},
           {"terms", run_length(result.terms)}};
  return doc.dump(2) + "\n";
}

std::string density_to_json(const DensityTable& table, const std::string& label) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json cells = json::array();
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      cells.push_back(json{{"length", table.checkpoints[c]},
                           {"distance", num(row.cells[c].distance)},
                           {"argmin", row.cells[c].argmin}});
    }
    rows.push_back(json{{"k", row.k}, {"target_id", row.target + 1}, {"cells", cells}});
  }
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "density-table"},
           {"label", label},
           {"targets", points(table.targets)},
           {"ks", table.ks},
           {"checkpoints", table.checkpoints},
           {"rows", rows},
           {"monotone", table.monotone()},
           {"worst_final", num(table.worst_final())}};
  return doc.dump(2) + "\n";
}

std::string kernel_csv(const Kernel& kernel, unsigned k, std::size_t n_max) {
  std::ostringstream out;
  out << "k,n,m,exact,decimal\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto row = kernel.row(k, n);
    for (std::size_t m = 1; m <= n; ++m) {
      const Rational& e = (*row)[m - 1];
      out << k << ',' << n << ',' << m << ',' << rational::to_string(e) << ',' << rational::to_decimal(e) << '\n';
    }
  }
  return out.str();
}

std::string kernel_json(const Kernel& kernel, unsigned k, std::size_t n_max) {
  json rows = json::array();
  for (std::size_t n = 1; n <= n_max; ++n) {
    json row = json::array();
    const auto entries = kernel.row(k, n);
    for (const auto& e : *entries) row.push_back(rational::to_string(e));
    rows.push_back(row);
  }
  json doc{{"schema_version", kSchemaVersion}, {"kind", "kernel-rows"}, {"k", k}, {"n_max", n_max}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::vector<KernelRow> kernel_rows_from_json(const std::string& text) {
  json doc = parse_document(text, "kernel-rows");
  std::vector<KernelRow> rows;
  for (const auto& row : doc.at("rows")) rows.push_back(read_nums(row));
  return rows;
}

std::vector<std::size_t> trajectory_indices(std::size_t from, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p < from && p <= n; p *= 2) out.push_back(p);
  for (std::size_t i = std::max<std::size_t>(from, 1); i <= n; ++i) out.push_back(i);
  return out;
}

std::string trajectory_csv(const Space& space, std::span<const Point> terms, std::span<const unsigned> orders,
                           std::span<const Point> targets, std::span<const std::size_t> indices) {
  if (orders.size() != targets.size()) throw PreconditionError("one iterate order per target");
  std::ostringstream out;
  out << "n,k";
  for (std::size_t i = 1; i <= space.dimension(); ++i) out << ",coord_" << i << ",coord_" << i << "_decimal";
  out << ",target_id,metric_distance,metric_distance_decimal\n";
  if (indices.empty()) return out.str();
  const unsigned depth = orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end());
  IterateTracker tracker(depth, space.dimension());
  std::size_t next = 0;
  for (std::size_t n = 1; n <= terms.size() && next < indices.size(); ++n) {
    tracker.push(terms[n - 1]);
    if (indices[next] != n) continue;
    ++next;
    for (std::size_t j = 0; j < orders.size(); ++j) {
      const Point& value = tracker.value(orders[j]);
      out << n << ',' << orders[j];
      for (const auto& c : value.coords()) out << ',' << rational::to_string(c) << ',' << rational::to_decimal(c);
      Rational d = space.metric(value, targets[j]);
      out << ',' << j + 1 << ',' << rational::to_string(d) << ',' << rational::to_decimal(d) << '\n';
    }
  }
  return out.str();
}

}  // namespace cesaro
