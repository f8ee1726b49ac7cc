#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cesaro/errors.hpp"
#include "json.hpp"

namespace cesaro::cli {
namespace {

using json = nlohmann::json;

Rational fraction(const json& j, const std::string& what) {
  if (j.is_string()) return rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw PreconditionError(what + ": numbers must be written as fraction strings such as \"3/10\"");
}

Point point(const json& j, const std::string& what) {
  if (!j.is_array()) throw PreconditionError(what + ": expected a coordinate list");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(fraction(c, what));
  return Point(std::move(coords));
}

std::vector<Point> point_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw PreconditionError(what + ": expected a list of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point(p, what));
  return out;
}

std::size_t natural(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw PreconditionError(what + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Config parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw PreconditionError("config must be a JSON object");
  if (!doc.contains("schema_version") || doc["schema_version"] != 1) {
    throw PreconditionError("config schema_version must be 1");
  }

  Config cfg;
  try {
    if (doc.contains("space")) {
      const json& s = doc["space"];
      std::size_t d = natural(s.at("dimension"), "space.dimension");
      if (s.contains("seminorm_weights")) {
        std::vector<Rational> w;
        for (const auto& x : s["seminorm_weights"]) w.push_back(fraction(x, "space.seminorm_weights"));
        if (w.size() != d) throw PreconditionError("space.seminorm_weights must have one weight per dimension");
        cfg.space = Space(std::move(w));
      } else {
        cfg.space = Space(d);
      }
    }
    const std::size_t d = cfg.space.dimension();

    cfg.ground = GroundSet::lattice(d, Rational(1));
    if (doc.contains("ground_set")) {
      const json& g = doc["ground_set"];
      const std::string kind = g.at("kind").get<std::string>();
      if (kind == "lattice") {
        cfg.ground = GroundSet::lattice(d, g.contains("scale") ? fraction(g["scale"], "ground_set.scale") : Rational(1));
      } else if (kind == "explicit") {
        cfg.ground = GroundSet::explicit_points(FinitePointSet(point_list(g.at("points"), "ground_set.points")));
      } else {
        throw PreconditionError("ground_set.kind must be \"lattice\" or \"explicit\"");
      }
      if (cfg.ground.dimension() != d) throw PreconditionError("ground set dimension differs from the space");
    }

    if (doc.contains("index_set")) {
      const json& ix = doc["index_set"];
      const std::string kind = ix.at("kind").get<std::string>();
      if (kind == "all") {
        cfg.index_set = IndexSet::all();
      } else if (kind == "progression") {
        cfg.index_set = IndexSet::progression(Integer(static_cast<unsigned long>(natural(ix.at("offset"), "index_set.offset"))),
                                              Integer(static_cast<unsigned long>(natural(ix.at("stride"), "index_set.stride"))));
      } else {
        throw PreconditionError("index_set.kind must be \"all\" or \"progression\"");
      }
    }

    if (doc.contains("mode")) cfg.mode = doc["mode"].get<std::string>();
    if (doc.contains("epsilon")) cfg.epsilon = fraction(doc["epsilon"], "epsilon");
    if (doc.contains("k")) cfg.k = static_cast<unsigned>(natural(doc["k"], "k"));
    if (doc.contains("targets")) cfg.targets = point_list(doc["targets"], "targets");
    if (doc.contains("prefix")) cfg.prefix = point_list(doc["prefix"], "prefix");
    if (doc.contains("seed")) cfg.seed = natural(doc["seed"], "seed");

    const json* atoms = nullptr;
    if (doc.contains("extend") && doc["extend"].contains("atoms")) atoms = &doc["extend"]["atoms"];
    else if (doc.contains("atoms")) atoms = &doc["atoms"];
    if (atoms) {
      for (const auto& a : *atoms) {
        cfg.atoms.push_back({fraction(a.at("coefficient"), "atoms.coefficient"), point(a.at("point"), "atoms.point")});
      }
    }
    if (doc.contains("plan")) {
      for (const auto& e : doc["plan"]) {
        cfg.plan.push_back({point_list(e.at("targets"), "plan.targets"), fraction(e.at("precision"), "plan.precision")});
      }
    }

    if (doc.contains("budgets")) {
      const json& b = doc["budgets"];
      if (b.contains("kernel_k_max")) cfg.kernel_budget.k_max = static_cast<unsigned>(natural(b["kernel_k_max"], "budgets.kernel_k_max"));
      if (b.contains("kernel_n_max")) cfg.kernel_budget.n_max = natural(b["kernel_n_max"], "budgets.kernel_n_max");
      if (b.contains("term_cap")) cfg.term_cap = natural(b["term_cap"], "budgets.term_cap");
    }

    if (doc.contains("dense")) {
      const json& ds = doc["dense"];
      DenseSettings& dense = cfg.dense;
      if (ds.contains("values")) {
        for (const auto& v : ds["values"]) dense.enumeration.push_back(fraction(v, "dense.values"));
      }
      if (ds.contains("growth")) dense.growth = ds["growth"].get<std::string>();
      if (ds.contains("base")) dense.base = natural(ds["base"], "dense.base");
      if (ds.contains("length")) dense.length = natural(ds["length"], "dense.length");
      if (ds.contains("ks")) {
        dense.ks.clear();
        for (const auto& k : ds["ks"]) dense.ks.push_back(static_cast<unsigned>(natural(k, "dense.ks")));
      }
      if (ds.contains("targets")) dense.targets = point_list(ds["targets"], "dense.targets");
      if (ds.contains("checkpoints")) {
        for (const auto& c : ds["checkpoints"]) dense.checkpoints.push_back(natural(c, "dense.checkpoints"));
      }
      if (ds.contains("tolerance")) dense.tolerance = fraction(ds["tolerance"], "dense.tolerance");
    }

    if (doc.contains("output")) {
      const json& o = doc["output"];
      if (o.contains("trace")) cfg.trace_path = o["trace"].get<std::string>();
      if (o.contains("trajectory")) cfg.trajectory_path = o["trajectory"].get<std::string>();
      if (o.contains("summary")) cfg.summary_path = o["summary"].get<std::string>();
      if (o.contains("trajectory_window")) cfg.trajectory_window = natural(o["trajectory_window"], "output.trajectory_window");
    }
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("config field error: ") + e.what());
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

KernelBudget budget_from_env(KernelBudget budget) {
  const char* raw = std::getenv("CESARO_CACHE_BUDGET");
  if (!raw || !*raw) return budget;
  std::string text(raw);
  try {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      budget.n_max = std::stoul(text);
    } else {
      budget.k_max = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
      budget.n_max = std::stoul(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw PreconditionError("CESARO_CACHE_BUDGET must look like \"K:N\" or \"N\", got \"" + text + "\"");
  }
  if (budget.k_max < 1 || budget.n_max < 1) throw PreconditionError("CESARO_CACHE_BUDGET values must be positive");
  return budget;
}

}  // namespace cesaro::cli
