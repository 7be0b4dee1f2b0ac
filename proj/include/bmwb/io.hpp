#pragma once

#include "bmwb/matroid.hpp"
#include "bmwb/oracle.hpp"
#include "bmwb/solvers.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace bmwb {

using Json = nlohmann::ordered_json;

/// A validated instance: the matroid, the exact cost pairs, and a digest of
/// the canonical serialization.
struct ParsedInstance {
  MatroidPtr matroid;
  BiCost costs;
  std::string digest;
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_file(const std::string& path);

enum class Family { graphic, uniform, partition };

struct GenParams {
  Family family = Family::graphic;
  int n = 6;               // graphic: vertex count
  double edge_prob = 0.6;  // graphic: edge probability
  int m = 8;               // uniform/partition: ground size
  int rank = 3;            // uniform: rank bound
  int blocks = 2;          // partition: block count
  int cost_min = -5;
  int cost_max = 9;
};

/// Deterministic instance generation: identical bytes for identical inputs.
Json generate_instance(std::uint64_t seed, const GenParams& params);

enum class SolverKind { global, adjacency, tailored, dichotomic };

SolverKind solver_from_name(const std::string& name);
std::string solver_name(SolverKind kind);

struct RunReport {
  std::string solver;
  std::string digest;
  FrontierReport frontier;
  double wall_ms = 0;
  std::vector<std::string> violations;  // populated by --verify
};

/// Runs one solver on a parsed instance. When verify is set, cross-checks
/// the result against the brute-force oracle (subject to the cap).
RunReport run_solver(const ParsedInstance& instance, SolverKind kind, bool verify,
                     long long cap = enumeration_cap());

/// Deterministic report serialization; wall time is informational only and
/// excluded unless include_timing is set.
Json report_to_json(const RunReport& report, bool include_timing = false);

Json truth_to_json(const FrontierTruth& truth, const std::string& digest);

/// FNV-1a over the canonical instance serialization.
std::string instance_digest(const Json& canonical);

}  // namespace bmwb
