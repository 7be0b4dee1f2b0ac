#include "bmwb/io.hpp"

#include "bmwb/errors.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

namespace bmwb {

namespace {

Json canonical_instance_json(const Json& doc) {
  Json canonical;
  canonical["version"] = doc.at("version");
  canonical["matroid"] = doc.at("matroid");
  canonical["costs"] = doc.at("costs");
  return canonical;
}

BiCost parse_costs(const Json& doc, int expected_count) {
  const auto& rows = doc.at("costs");
  if (!rows.is_array()) throw ParseError("'costs' must be an array");
  if (static_cast<int>(rows.size()) != expected_count) {
    throw ParseError("cost row count " + std::to_string(rows.size()) +
                     " does not match element count " + std::to_string(expected_count));
  }
  BiCost costs;
  costs.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 2)
      throw ParseError("each cost row must be a [c1, c2] pair");
    auto as_rational = [](const Json& cell) {
      if (cell.is_number_integer())
        return Rational(cell.get<long long>());
      if (cell.is_string()) return parse_rational(cell.get<std::string>());
      throw ParseError("costs must be integers or 'p/q' strings");
    };
    costs.push_back({as_rational(row[0]), as_rational(row[1])});
  }
  return costs;
}

MatroidPtr parse_matroid(const Json& doc) {
  const auto& spec = doc.at("matroid");
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "graphic") {
    int n = spec.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& edge : spec.at("edges")) {
      if (!edge.is_array() || edge.size() != 2)
        throw ParseError("each edge must be a [u, v] pair");
      edges.push_back({edge[0].get<int>(), edge[1].get<int>()});
    }
    return std::make_shared<GraphicMatroid>(n, std::move(edges));
  }
  if (kind == "uniform") {
    return std::make_shared<UniformMatroid>(spec.at("m").get<int>(),
                                            spec.at("rank").get<int>());
  }
  if (kind == "partition") {
    return std::make_shared<PartitionMatroid>(
        spec.at("blocks").get<std::vector<int>>(),
        spec.at("capacities").get<std::vector<int>>());
  }
  throw ParseError("unknown matroid kind '" + kind + "'");
}

}  // namespace

std::string instance_digest(const Json& canonical) {
  const std::string bytes = canonical.dump();
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

ParsedInstance parse_instance(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError("unsupported format version");
    ParsedInstance parsed;
    parsed.matroid = parse_matroid(doc);
    parsed.costs = parse_costs(doc, parsed.matroid->ground_size());
    parsed.digest = instance_digest(canonical_instance_json(doc));
    return parsed;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed instance: ") + err.what());
  } catch (const InputError& err) {
    throw ParseError(std::string("invalid instance: ") + err.what());
  }
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

namespace {

// Thin deterministic wrapper; mt19937_64 is fully specified by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool bernoulli(double p) {
    return static_cast<double>(engine_() >> 11) / 9007199254740992.0 < p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Json generate_instance(std::uint64_t seed, const GenParams& params) {
  Rng rng(seed);
  Json matroid;
  int element_count = 0;

  switch (params.family) {
    case Family::graphic: {
      if (params.n < 2) throw InputError("graphic family needs n >= 2");
      std::vector<std::pair<int, int>> edges;
      // Redraw until connected.
      while (true) {
        edges.clear();
        for (int u = 0; u < params.n; ++u) {
          for (int v = u + 1; v < params.n; ++v) {
            if (rng.bernoulli(params.edge_prob)) edges.push_back({u, v});
          }
        }
        try {
          GraphicMatroid probe(params.n, edges);
          break;
        } catch (const InputError&) {
          continue;
        }
      }
      matroid["kind"] = "graphic";
      matroid["vertices"] = params.n;
      Json edge_rows = Json::array();
      for (const auto& [u, v] : edges) edge_rows.push_back(Json::array({u, v}));
      matroid["edges"] = std::move(edge_rows);
      element_count = static_cast<int>(edges.size());
      break;
    }
    case Family::uniform: {
      if (params.rank < 0 || params.rank > params.m)
        throw InputError("uniform family needs 0 <= rank <= m");
      matroid["kind"] = "uniform";
      matroid["m"] = params.m;
      matroid["rank"] = params.rank;
      element_count = params.m;
      break;
    }
    case Family::partition: {
      if (params.blocks < 1 || params.m < params.blocks)
        throw InputError("partition family needs 1 <= blocks <= m");
      std::vector<int> blocks(params.m);
      for (int e = 0; e < params.m; ++e) blocks[e] = rng.uniform(0, params.blocks - 1);
      std::vector<int> capacities(params.blocks);
      for (int& cap : capacities) cap = rng.uniform(1, 3);
      matroid["kind"] = "partition";
      matroid["blocks"] = blocks;
      matroid["capacities"] = capacities;
      element_count = params.m;
      break;
    }
  }

  Json costs = Json::array();
  for (int e = 0; e < element_count; ++e) {
    int c1 = rng.uniform(params.cost_min, params.cost_max);
    int c2 = rng.uniform(params.cost_min, params.cost_max);
    costs.push_back(Json::array({c1, c2}));
  }

  Json doc;
  doc["version"] = 1;
  doc["matroid"] = std::move(matroid);
  doc["costs"] = std::move(costs);
  return doc;
}

SolverKind solver_from_name(const std::string& name) {
  if (name == "global") return SolverKind::global;
  if (name == "adjacency") return SolverKind::adjacency;
  if (name == "tailored") return SolverKind::tailored;
  if (name == "dichotomic") return SolverKind::dichotomic;
  throw InputError("unknown solver '" + name + "'");
}

std::string solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::global: return "global";
    case SolverKind::adjacency: return "adjacency";
    case SolverKind::tailored: return "tailored";
    case SolverKind::dichotomic: return "dichotomic";
  }
  throw LogicError("unreachable solver kind");
}

RunReport run_solver(const ParsedInstance& instance, SolverKind kind, bool verify,
                     long long cap) {
  RunReport report;
  report.solver = solver_name(kind);
  report.digest = instance.digest;

  const auto start = std::chrono::steady_clock::now();
  switch (kind) {
    case SolverKind::global: {
      std::vector<Basis> bases = enumerate_bases(*instance.matroid, cap);
      report.frontier = sweep_to_report(global_esn_sweep(bases, instance.costs));
      break;
    }
    case SolverKind::adjacency:
      report.frontier =
          sweep_to_report(adjacency_esn_sweep(*instance.matroid, instance.costs));
      break;
    case SolverKind::tailored:
      report.frontier = tailored_esn_sweep(*instance.matroid, instance.costs);
      break;
    case SolverKind::dichotomic:
      report.frontier = dichotomic_search(*instance.matroid, instance.costs);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (verify) {
    FrontierTruth truth = brute_force_frontiers(*instance.matroid, instance.costs, cap);
    report.violations = verify_report(report.frontier, truth);
  }
  return report;
}

namespace {

Json point_to_json(const Point2& y) {
  return Json::array({rational_to_string(y.y1), rational_to_string(y.y2)});
}

Json interval_to_json(const WeightInterval& interval) {
  return Json::array({rational_to_string(interval.lo), rational_to_string(interval.hi)});
}

}  // namespace

Json report_to_json(const RunReport& report, bool include_timing) {
  Json doc;
  doc["solver"] = report.solver;
  doc["instance_digest"] = report.digest;

  // Points sorted by y1 ascending; the frontier itself is interval-ordered
  // (y1 descending), so emit it reversed.
  Json points = Json::array();
  Json decomposition = Json::array();
  Json representatives = Json::array();
  for (auto it = report.frontier.entries.rbegin(); it != report.frontier.entries.rend();
       ++it) {
    points.push_back(point_to_json(it->point));
    representatives.push_back(it->representative.elements);
  }
  for (const auto& entry : report.frontier.entries) {
    decomposition.push_back(Json{{"interval", interval_to_json(entry.interval)},
                                 {"point", point_to_json(entry.point)}});
  }
  doc["esn_points"] = std::move(points);
  doc["representatives"] = std::move(representatives);
  doc["weight_decomposition"] = std::move(decomposition);
  doc["stats"] = Json{{"iterations", report.frontier.stats.iterations},
                      {"independence_tests", report.frontier.stats.independence_tests}};
  if (include_timing) doc["stats"]["wall_ms"] = report.wall_ms;
  if (!report.violations.empty()) doc["violations"] = report.violations;
  return doc;
}

Json truth_to_json(const FrontierTruth& truth, const std::string& digest) {
  Json doc;
  doc["instance_digest"] = digest;
  doc["basis_count"] = truth.all.size();
  auto points_to_json = [](const std::set<Point2>& points) {
    Json rows = Json::array();
    for (const auto& y : points) rows.push_back(point_to_json(y));
    return rows;
  };
  doc["y_n"] = points_to_json(truth.y_n);
  doc["y_sn"] = points_to_json(truth.y_sn);
  doc["y_esn"] = points_to_json(truth.y_esn);
  doc["x_se_count"] = truth.x_se.size();
  doc["x_ese_count"] = truth.x_ese.size();
  return doc;
}

}  // namespace bmwb
