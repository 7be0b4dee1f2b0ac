#pragma once

#include "bmwb/matroid.hpp"
#include "bmwb/solvers.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace bmwb {

// Brute-force ground truth for one instance: every basis with its image,
// the classified point sets, the solution sets, and the weight-set component
// of every supported basis.
struct FrontierTruth {
  std::vector<std::pair<Basis, Point2>> all;  // every basis and its image
  std::set<Point2> y_n;
  std::set<Point2> y_sn;
  std::set<Point2> y_esn;
  std::set<Basis> x_e;
  std::set<Basis> x_se;
  std::set<Basis> x_ese;
  std::map<Basis, WeightInterval> weight_components;  // for x_se members
};

/// Undirected adjacency graph on bases: edge iff |B \ B'| = 1.
struct AdjacencyGraph {
  std::vector<Basis> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes
};

/// Enumerates all bases and classifies everything. Supportedness is decided
/// by exact optimality checks at the event lambdas and interval midpoints;
/// point classes come from the convex-hull classification, giving two
/// independent routes that the property tests compare.
FrontierTruth brute_force_frontiers(const Matroid& instance, const BiCost& costs,
                                    long long cap = enumeration_cap());

AdjacencyGraph adjacency_graph(const std::vector<Basis>& bases);

/// True iff the subgraph induced by the subset is connected; empty and
/// singleton subsets count as connected.
bool check_connectivity(const AdjacencyGraph& graph, const std::set<Basis>& subset);

/// Cross-checks a full sweep against the ground truth. Empty iff every
/// visited basis is supported efficient, the extreme-flagged images equal
/// Y_ESN, the weight intervals match, and claimed adjacency steps hold.
std::vector<std::string> verify_sweep(const SweepResult& result,
                                      const FrontierTruth& truth);

/// Same cross-check for image-keyed frontier reports.
std::vector<std::string> verify_report(const FrontierReport& report,
                                       const FrontierTruth& truth);

}  // namespace bmwb
