#include "bmwb/oracle.hpp"

#include "bmwb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bmwb {

namespace {

std::string point_to_string(const Point2& y) {
  std::ostringstream out;
  out << '(' << rational_to_string(y.y1) << ", " << rational_to_string(y.y2) << ')';
  return out.str();
}

std::string basis_to_string(const Basis& b) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (i > 0) out << ',';
    out << b.elements[i];
  }
  out << '}';
  return out.str();
}

// Probe lambdas that separate all optimal-set changes: every event value
// plus a midpoint inside each gap of (0, 1). Optimal solution sets are
// constant between consecutive events, so these probes decide supportedness
// exactly.
std::vector<Rational> probe_lambdas(const BiCost& costs) {
  std::vector<Rational> probes;
  EventSchedule events = build_event_schedule(critical_pairs(costs));
  Rational prev(0);
  for (const auto& event : events) {
    probes.push_back((prev + event.lambda) / 2);
    probes.push_back(event.lambda);
    prev = event.lambda;
  }
  probes.push_back((prev + 1) / 2);
  return probes;
}

}  // namespace

FrontierTruth brute_force_frontiers(const Matroid& instance, const BiCost& costs,
                                    long long cap) {
  FrontierTruth truth;
  std::vector<Basis> bases = enumerate_bases(instance, cap);

  std::vector<Point2> images;
  images.reserve(bases.size());
  for (const auto& b : bases) {
    Point2 y = image_of(b, costs);
    truth.all.push_back({b, y});
    images.push_back(y);
  }

  std::vector<PointClass> labels = classify_frontier(images);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    switch (labels[i]) {
      case PointClass::extreme_supported:
        truth.y_esn.insert(images[i]);
        [[fallthrough]];
      case PointClass::supported_nonextreme:
        truth.y_sn.insert(images[i]);
        [[fallthrough]];
      case PointClass::nondominated_unsupported:
        truth.y_n.insert(images[i]);
        truth.x_e.insert(bases[i]);
        break;
      case PointClass::dominated:
        break;
    }
  }

  // Supported bases via exact optimality probes over distinct images.
  std::vector<Point2> distinct(images);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::set<Point2> supported_images;
  for (const Rational& lambda : probe_lambdas(costs)) {
    Rational best;
    bool have_best = false;
    for (const auto& y : distinct) {
      Rational value = weighted_value(lambda, y);
      if (!have_best || value < best) {
        best = value;
        have_best = true;
      }
    }
    for (const auto& y : distinct) {
      if (weighted_value(lambda, y) == best) supported_images.insert(y);
    }
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (supported_images.count(images[i])) {
      truth.x_se.insert(bases[i]);
      if (truth.y_esn.count(images[i])) truth.x_ese.insert(bases[i]);
    }
  }

  // Weight-set components per supported image (they depend only on the
  // image): alpha bounds from the slopes towards every other image.
  std::map<Point2, WeightInterval> interval_of;
  for (const auto& y : distinct) {
    if (!supported_images.count(y)) continue;
    Slope alpha_down = Slope::negative_infinity();  // max slope to the left
    Slope alpha_up(Rational(0));                    // min slope to the right
    for (const auto& other : distinct) {
      if (other.y1 == y.y1) continue;
      Slope slope = slope_between(y, other);
      if (other.y1 < y.y1) {
        if (alpha_down < slope) alpha_down = slope;
      } else {
        if (slope < alpha_up) alpha_up = slope;
      }
    }
    interval_of[y] = weight_interval(alpha_up, alpha_down);
  }
  for (const auto& b : truth.x_se) {
    truth.weight_components[b] = interval_of.at(image_of(b, costs));
  }

  return truth;
}

AdjacencyGraph adjacency_graph(const std::vector<Basis>& bases) {
  for (std::size_t i = 0; i + 1 < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (bases[i] == bases[j]) throw InputError("adjacency_graph: duplicate basis");
    }
  }
  AdjacencyGraph graph;
  graph.nodes = bases;
  for (std::size_t i = 0; i + 1 < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      std::vector<ElementId> diff;
      std::set_difference(bases[i].elements.begin(), bases[i].elements.end(),
                          bases[j].elements.begin(), bases[j].elements.end(),
                          std::back_inserter(diff));
      if (diff.size() == 1) graph.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return graph;
}

bool check_connectivity(const AdjacencyGraph& graph, const std::set<Basis>& subset) {
  std::vector<int> members;
  std::vector<int> position(graph.nodes.size(), -1);
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (subset.count(graph.nodes[i])) {
      position[i] = static_cast<int>(members.size());
      members.push_back(static_cast<int>(i));
    }
  }
  if (members.size() != subset.size())
    throw InputError("check_connectivity: subset not contained in the node set");
  if (members.size() <= 1) return true;

  std::vector<std::vector<int>> adjacency(members.size());
  for (const auto& [a, b] : graph.edges) {
    if (position[a] >= 0 && position[b] >= 0) {
      adjacency[position[a]].push_back(position[b]);
      adjacency[position[b]].push_back(position[a]);
    }
  }
  std::vector<bool> seen(members.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == members.size();
}

std::vector<std::string> verify_sweep(const SweepResult& result,
                                      const FrontierTruth& truth) {
  std::vector<std::string> violations;

  std::set<Point2> extreme_images;
  for (const auto& entry : result.visited) {
    if (!truth.x_se.count(entry.basis)) {
      violations.push_back("visited basis " + basis_to_string(entry.basis) +
                           " is not supported efficient");
      continue;
    }
    const WeightInterval& expected = truth.weight_components.at(entry.basis);
    if (entry.interval != expected) {
      violations.push_back("weight interval of " + basis_to_string(entry.basis) +
                           " is [" + rational_to_string(entry.interval.lo) + ", " +
                           rational_to_string(entry.interval.hi) + "], expected [" +
                           rational_to_string(expected.lo) + ", " +
                           rational_to_string(expected.hi) + "]");
    }
    if (entry.extreme) extreme_images.insert(entry.image);
  }

  if (extreme_images != truth.y_esn) {
    violations.push_back("extreme-flagged images differ from Y_ESN");
  }

  if (result.adjacent_steps) {
    for (std::size_t k = 1; k < result.visited.size(); ++k) {
      std::vector<ElementId> diff;
      const auto& a = result.visited[k - 1].basis.elements;
      const auto& b = result.visited[k].basis.elements;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(diff));
      if (diff.size() != 1) {
        violations.push_back("step " + std::to_string(k) +
                             " is not an adjacent transition");
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_report(const FrontierReport& report,
                                       const FrontierTruth& truth) {
  std::vector<std::string> violations;
  std::set<Point2> points;
  for (const auto& entry : report.entries) {
    points.insert(entry.point);
    if (!truth.x_ese.count(entry.representative)) {
      violations.push_back("representative " + basis_to_string(entry.representative) +
                           " of " + point_to_string(entry.point) +
                           " is not extreme-supported efficient");
      continue;
    }
    const WeightInterval& expected = truth.weight_components.at(entry.representative);
    if (entry.interval != expected) {
      violations.push_back("weight interval of " + point_to_string(entry.point) +
                           " differs from the oracle");
    }
  }
  if (points != truth.y_esn) {
    violations.push_back("reported point set differs from Y_ESN");
  }
  return violations;
}

}  // namespace bmwb
