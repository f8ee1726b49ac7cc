#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cesaro/audit.hpp"
#include "cesaro/construct.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/kernel.hpp"
#include "cesaro/serialize.hpp"
#include "config.hpp"
#include "json.hpp"

namespace cesaro::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PreconditionError("cannot write " + path);
  out << content;
  out.close();
  if (!out) throw PreconditionError("failed writing " + path);
}

/// Summaries show the exact fraction when it is short; files always carry it.
std::string exact_and_decimal(const Rational& value) {
  std::string exact = rational::to_string(value);
  if (exact.size() > 24) return rational::to_decimal(value) + " (exact in trace)";
  return exact + " (" + rational::to_decimal(value) + ")";
}

/// Left-aligned text table with two-space gutters.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

Point convex_point(const ConvexWitness& atoms, std::size_t dimension) {
  Point x(dimension);
  for (const auto& a : atoms) x.add_scaled(a.coefficient, a.point);
  return x;
}

std::vector<std::size_t> window_indices(std::size_t from, std::size_t n, std::size_t window) {
  std::size_t start = std::max<std::size_t>(from, 1);
  if (window > 0 && n >= window && n - window + 1 > start) start = n - window + 1;
  return trajectory_indices(start, n);
}

void print_trace_summary(std::ostream& out, const Space& space, const ConstructionTrace& trace,
                         const IndexSet& index_set) {
  out << "achieved index n: " << trace.n << (index_set.contains(Integer(static_cast<unsigned long>(trace.n))) ? " (in index set)" : " (NOT in index set)")
      << '\n';
  out << "certified epsilon: " << exact_and_decimal(trace.epsilon) << '\n';
  out << "initial length: " << trace.initial_length << ", m0: " << trace.m0.get_str() << ", v: " << trace.partition.v
      << '\n';
  Table table({"target", "order", "value", "seminorm", "seminorm_distance", "metric_distance", "below_eps"});
  for (std::size_t i = 0; i < trace.targets.size(); ++i) {
    const auto& per = trace.seminorm_distances[i];
    for (std::size_t rho = 0; rho < space.dimension(); ++rho) {
      table.add({rho == 0 ? trace.targets[i].to_string() : "", rho == 0 ? std::to_string(i + 1) : "",
                 rho == 0 ? trace.values[i].to_string() : "", std::to_string(rho + 1), exact_and_decimal(per[rho]),
                 rho == 0 ? exact_and_decimal(trace.metric_distances[i]) : "",
                 rho == 0 ? (trace.metric_distances[i] < trace.epsilon ? "yes" : "no") : ""});
    }
  }
  table.print(out);
}

int construct_extend(const Config& cfg, const ConstructOptions& options, std::ostream& out) {
  if (!cfg.epsilon || !cfg.k) throw PreconditionError("extend mode needs epsilon and k");
  if (cfg.atoms.empty()) throw PreconditionError("extend mode needs extend.atoms");
  validate_witness(cfg.atoms, cfg.ground);
  require_dimension(cfg.prefix, cfg.space.dimension());
  ExtendResult r = extend_to_target(cfg.space, cfg.prefix, cfg.atoms, *cfg.epsilon, *cfg.k, cfg.term_cap);

  const std::string trace_path = options.trace.empty() ? cfg.trace_path : options.trace;
  const std::string trajectory_path = options.trajectory.empty() ? cfg.trajectory_path : options.trajectory;
  const Point x = convex_point(cfg.atoms, cfg.space.dimension());
  if (!trace_path.empty()) write_file(trace_path, extend_to_json(r, cfg.atoms, *cfg.epsilon, *cfg.k, cfg.prefix.size()));
  if (!trajectory_path.empty()) {
    std::vector<Point> terms = cfg.prefix;
    terms.insert(terms.end(), r.terms.begin(), r.terms.end());
    const std::vector<unsigned> orders{*cfg.k};
    const std::vector<Point> targets{x};
    write_file(trajectory_path, trajectory_csv(cfg.space, terms, orders, targets,
                                               window_indices(cfg.prefix.size() + 1, r.n0, cfg.trajectory_window)));
  }

  std::ostringstream s;
  s << "mode: extend\n";
  s << "target: " << x.to_string() << ", order k = " << *cfg.k << '\n';
  s << "certified epsilon: " << exact_and_decimal(*cfg.epsilon) << '\n';
  Table table({"n0", "m", "counts", "metric_distance", "distance_to_rounded", "rounding_distance"});
  std::string counts;
  for (std::size_t i = 0; i < r.counts.size(); ++i) counts += (i ? "," : "") + std::to_string(r.counts[i]);
  table.add({std::to_string(r.n0), std::to_string(r.m), counts, exact_and_decimal(r.distance),
             exact_and_decimal(r.distance_prime), exact_and_decimal(r.rounding_distance)});
  table.print(s);
  out << s.str();
  if (!cfg.summary_path.empty()) write_file(cfg.summary_path, s.str());
  return r.distance < *cfg.epsilon ? kOk : kFailure;
}

Growth growth_for(const DenseSettings& dense) {
  if (dense.growth == "unit") return unit_growth();
  if (dense.growth == "linear") return linear_growth();
  if (dense.growth == "power") return power_growth(dense.base);
  if (dense.growth == "tower") return tower_growth();
  throw PreconditionError("dense.growth must be unit, linear, power or tower");
}

int construct_dense(const Config& cfg, const ConstructOptions& options, std::ostream& out) {
  if (cfg.space.dimension() != 1) throw PreconditionError("dense mode runs in dimension 1");
  const DenseSettings& dense = cfg.dense;
  std::vector<Rational> enumeration = dense.enumeration.empty() ? signed_calkin_wilf(256) : dense.enumeration;
  DenseSequence sequence(enumeration, growth_for(dense));
  SeqPrefix prefix = sequence.prefix(dense.length);
  std::vector<Point> targets = dense.targets;
  if (targets.empty()) {
    for (std::size_t j = 0; j < std::min<std::size_t>(5, enumeration.size()); ++j) targets.push_back(Point{enumeration[j]});
  }
  DensityTable table = audit_density(cfg.space, prefix, targets, dense.ks, dense.checkpoints);

  std::string label = "empirical surrogate: growth " + dense.growth +
                      (dense.growth == "power" ? " base " + std::to_string(dense.base) : std::string()) + ", " +
                      std::to_string(dense.length) + " terms";
  const std::string trace_path = options.trace.empty() ? cfg.trace_path : options.trace;
  const std::string trajectory_path = options.trajectory.empty() ? cfg.trajectory_path : options.trajectory;
  if (!trace_path.empty()) write_file(trace_path, density_to_json(table, label));
  if (!trajectory_path.empty()) {
    std::vector<unsigned> orders;
    std::vector<Point> paired;
    for (unsigned k : table.ks) {
      for (const auto& t : table.targets) {
        orders.push_back(k);
        paired.push_back(t);
      }
    }
    write_file(trajectory_path, trajectory_csv(cfg.space, prefix, orders, paired, table.checkpoints));
  }

  std::ostringstream s;
  s << "mode: dense (" << label << ")\n";
  std::vector<std::string> header{"k", "target"};
  for (std::size_t c : table.checkpoints) header.push_back("n<=" + std::to_string(c));
  header.push_back("argmin");
  Table t(header);
  for (const auto& row : table.rows) {
    std::vector<std::string> line{std::to_string(row.k), table.targets[row.target].to_string()};
    for (const auto& cell : row.cells) line.push_back(rational::to_decimal(cell.distance, 6));
    line.push_back(std::to_string(row.cells.back().argmin));
    t.add(std::move(line));
  }
  t.print(s);
  const bool monotone = table.monotone();
  const Rational worst = table.worst_final();
  s << "nonincreasing in prefix length: " << (monotone ? "yes" : "no") << '\n';
  s << "worst min-distance at full length: " << exact_and_decimal(worst) << '\n';
  bool ok = true;
  if (dense.tolerance) {
    ok = monotone && worst < *dense.tolerance;
    s << "tolerance " << exact_and_decimal(*dense.tolerance) << ": " << (ok ? "met" : "NOT met") << '\n';
  }
  out << s.str();
  if (!cfg.summary_path.empty()) write_file(cfg.summary_path, s.str());
  return ok ? kOk : kFailure;
}

int construct_simultaneous_mode(const Config& cfg, const ConstructOptions& options, std::ostream& out) {
  if (!cfg.epsilon) throw PreconditionError("simultaneous mode needs epsilon");
  if (cfg.targets.empty()) throw PreconditionError("simultaneous mode needs targets");
  if (cfg.k && *cfg.k != cfg.targets.size()) throw PreconditionError("k must equal the number of targets");
  SimultaneousConfig sc{*cfg.epsilon, cfg.targets, cfg.index_set, cfg.term_cap};
  ConstructionTrace trace = construct_simultaneous(cfg.space, cfg.ground, cfg.prefix, sc);

  const std::string trace_path = options.trace.empty() ? cfg.trace_path : options.trace;
  const std::string trajectory_path = options.trajectory.empty() ? cfg.trajectory_path : options.trajectory;
  if (!trace_path.empty()) write_file(trace_path, trace_to_json(trace));
  if (!trajectory_path.empty()) {
    std::vector<unsigned> orders;
    for (unsigned i = 1; i <= trace.k; ++i) orders.push_back(i);
    write_file(trajectory_path, trajectory_csv(cfg.space, trace.terms, orders, trace.targets,
                                               window_indices(1, trace.n, cfg.trajectory_window)));
  }
  std::ostringstream s;
  s << "mode: simultaneous\n";
  print_trace_summary(s, cfg.space, trace, cfg.index_set);
  out << s.str();
  if (!cfg.summary_path.empty()) write_file(cfg.summary_path, s.str());
  return kOk;
}

int construct_plan(const Config& cfg, const ConstructOptions& options, std::ostream& out) {
  if (cfg.plan.empty()) throw PreconditionError("plan mode needs a nonempty plan");
  PlanResult plan = run_plan(cfg.space, cfg.ground, cfg.plan, cfg.index_set, cfg.term_cap);

  const std::string trace_path = options.trace.empty() ? cfg.trace_path : options.trace;
  const std::string trajectory_path = options.trajectory.empty() ? cfg.trajectory_path : options.trajectory;
  if (!trace_path.empty()) write_file(trace_path, plan_to_json(plan));
  if (!trajectory_path.empty()) {
    const ConstructionTrace& last = plan.traces.back();
    std::vector<unsigned> orders;
    for (unsigned i = 1; i <= last.k; ++i) orders.push_back(i);
    write_file(trajectory_path, trajectory_csv(cfg.space, plan.terms, orders, last.targets,
                                               window_indices(1, last.n, cfg.trajectory_window)));
  }
  std::ostringstream s;
  s << "mode: plan\n";
  for (std::size_t e = 0; e < plan.traces.size(); ++e) {
    s << "\nentry " << e + 1 << ", precision " << exact_and_decimal(cfg.plan[e].precision) << '\n';
    print_trace_summary(s, cfg.space, plan.traces[e], cfg.index_set);
  }
  s << "\nschedule:";
  for (std::size_t n : plan.schedule) s << ' ' << n;
  s << '\n';
  out << s.str();
  if (!cfg.summary_path.empty()) write_file(cfg.summary_path, s.str());
  return kOk;
}

bool same_distances(const ConstructionTrace& stored, const ConstructionTrace& replayed) {
  return stored.n == replayed.n && stored.values == replayed.values &&
         stored.metric_distances == replayed.metric_distances &&
         stored.seminorm_distances == replayed.seminorm_distances;
}

}  // namespace

const std::vector<std::string>& audit_suites() {
  static const std::vector<std::string> suites{"kernel", "log-bound", "recurrence", "oracle", "abel", "second-iterate"};
  return suites;
}

int run_kernel(const KernelOptions& options, std::ostream& out) {
  if (options.k < 1 || options.n < 1) throw PreconditionError("kernel needs k >= 1 and n >= 1");
  Kernel kernel(budget_from_env(KernelBudget{}));
  std::string text;
  if (options.format == "csv") {
    text = kernel_csv(kernel, options.k, options.n);
  } else if (options.format == "json") {
    text = kernel_json(kernel, options.k, options.n);
  } else {
    throw PreconditionError("--format must be csv or json");
  }
  if (options.output.empty()) {
    out << text;
  } else {
    write_file(options.output, text);
  }
  return kOk;
}

int run_audit(const AuditOptions& options, std::ostream& out) {
  const auto& suites = audit_suites();
  if (std::find(suites.begin(), suites.end(), options.suite) == suites.end()) {
    throw PreconditionError("unknown audit suite '" + options.suite + "'");
  }
  Kernel kernel(budget_from_env(KernelBudget{}));
  AuditReport report;
  const std::string& suite = options.suite;
  if (suite == "kernel") {
    KernelAuditOptions ko;
    ko.seed = options.seed;
    if (options.samples) ko.ratio_samples = *options.samples;
    report = audit_kernel(kernel, options.k_max, options.n_max.value_or(120), ko);
  } else if (suite == "log-bound") {
    report = audit_log_bound(kernel, options.k_max, options.n_max.value_or(120));
  } else if (suite == "recurrence") {
    report = audit_recurrence(kernel, options.k_max, options.a_max, options.n_max.value_or(40), options.seed);
  } else if (suite == "oracle") {
    report = audit_oracle(kernel, options.samples.value_or(1000), options.k_max, options.n_max.value_or(50),
                          options.d_max, options.seed);
  } else if (suite == "abel") {
    report = audit_abel(options.samples.value_or(1000), options.seed);
  } else {
    report = audit_second_iterate(kernel, options.samples.value_or(500), options.n_max.value_or(100), options.seed);
  }
  if (!options.output.empty()) write_file(options.output, report_to_json(report, options.timing));

  out << "suite: " << report.suite << '\n';
  Table table({"check", "checked", "failed"});
  for (const auto& c : report.checks) table.add({c.name, std::to_string(c.checked), std::to_string(c.failed)});
  table.print(out);
  out << "total: " << report.checked << " checked, " << report.passed << " passed, " << report.failed << " failed, "
      << report.skipped << " skipped\n";
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  for (const auto& c : report.counterexamples) {
    out << "counterexample [" << c.check << "] " << c.inputs << ": " << c.lhs << " vs " << c.rhs << '\n';
  }
  if (options.timing) out << "wall seconds: " << std::fixed << std::setprecision(3) << report.wall_seconds << '\n';
  return report.ok() ? kOk : kFailure;
}

int run_construct(const ConstructOptions& options, std::ostream& out) {
  Config cfg = load_config(options.config);
  const std::string mode = options.mode.empty() ? cfg.mode : options.mode;
  if (mode == "dense") return construct_dense(cfg, options, out);
  if (mode == "extend") return construct_extend(cfg, options, out);
  if (mode == "simultaneous") return construct_simultaneous_mode(cfg, options, out);
  if (mode == "plan") return construct_plan(cfg, options, out);
  throw PreconditionError("--mode must be dense, extend, simultaneous or plan");
}

int run_replay(const ReplayOptions& options, std::ostream& out) {
  const std::string text = read_file(options.trace);
  std::string kind;
  try {
    kind = nlohmann::json::parse(text).value("kind", std::string());
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError(options.trace + " is not valid JSON");
  }
  std::vector<ConstructionTrace> traces;
  if (kind == "simultaneous-trace") {
    traces.push_back(trace_from_json(text));
  } else if (kind == "plan-trace") {
    traces = plan_from_json(text).traces;
  } else {
    throw PreconditionError("replay reads simultaneous-trace or plan-trace documents, got '" + kind + "'");
  }
  if (traces.empty()) throw PreconditionError("trace holds no constructions");
  Config cfg;
  if (!options.config.empty()) {
    cfg = load_config(options.config);
  } else {
    cfg.space = Space(traces.front().targets.front().dimension());
  }

  bool ok = true;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    ConstructionTrace replayed = replay_values(cfg.space, traces[i]);
    const bool same = same_distances(traces[i], replayed);
    bool certified = true;
    for (const auto& d : replayed.metric_distances) certified = certified && d < replayed.epsilon;
    ok = ok && same && certified;
    if (traces.size() > 1) out << (i ? "\n" : "") << "entry " << i + 1 << '\n';
    print_trace_summary(out, cfg.space, replayed, cfg.index_set);
    out << "replay matches stored distances: " << (same ? "yes" : "no") << '\n';
  }
  return ok ? kOk : kFailure;
}

}  // namespace cesaro::cli
