#include "bmwb/solvers.hpp"

#include "bmwb/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace bmwb {

Basis greedy_basis(const Matroid& instance, const Ordering& ordering,
                   long long* tests) {
  const int m = instance.ground_size();
  if (static_cast<int>(ordering.elements.size()) != m)
    throw InputError("ordering must cover the whole ground set");
  std::vector<bool> seen(m, false);
  for (ElementId e : ordering.elements) {
    if (e < 0 || e >= m || seen[e]) throw InputError("ordering is not a permutation");
    seen[e] = true;
  }

  std::vector<ElementId> current;
  for (ElementId e : ordering.elements) {
    std::vector<ElementId> candidate = current;
    candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), e), e);
    if (tests) ++*tests;
    if (instance.is_independent(candidate)) current = std::move(candidate);
  }
  return Basis{std::move(current)};
}

Ordering lex_ordering(const BiCost& costs, const Rational& lambda, Tiebreak tiebreak) {
  if (lambda < 0 || lambda > 1) throw InputError("lambda outside [0, 1]");
  const int m = static_cast<int>(costs.size());
  std::vector<Rational> weight(m);
  for (ElementId e = 0; e < m; ++e) weight[e] = weighted_cost(lambda, e, costs);

  Ordering ordering;
  ordering.elements.resize(m);
  for (ElementId e = 0; e < m; ++e) ordering.elements[e] = e;
  std::sort(ordering.elements.begin(), ordering.elements.end(),
            [&](ElementId a, ElementId b) {
              if (weight[a] != weight[b]) return weight[a] < weight[b];
              if (costs[a].c1 != costs[b].c1) {
                return tiebreak == Tiebreak::c1_ascending ? costs[a].c1 < costs[b].c1
                                                          : costs[a].c1 > costs[b].c1;
              }
              return a < b;
            });
  return ordering;
}

namespace {

// Fills intervals, extreme flags, and breakpoints of a sweep whose visited
// entries and move slopes are already known. first_lo is the lower end of
// the first weight interval (0 for full sweeps).
void finish_sweep(SweepResult& result, const std::vector<Slope>& move_slopes,
                  const Rational& first_lo) {
  std::vector<Rational> lambdas;
  lambdas.reserve(move_slopes.size());
  for (const auto& slope : move_slopes) lambdas.push_back(lambda_of_alpha(slope));
  result.breakpoints = lambdas;

  for (std::size_t k = 0; k < result.visited.size(); ++k) {
    Rational lo = (k == 0) ? first_lo : lambdas[k - 1];
    Rational hi = (k + 1 < result.visited.size()) ? lambdas[k] : Rational(1);
    result.visited[k].interval = {lo, hi};
    result.visited[k].extreme = lo < hi;
  }
}

struct ImageGroup {
  Point2 image;
  Basis representative;  // id-lexicographically smallest basis of the image
};

// Sweep over explicit images; shared by global_esn_sweep.
SweepResult sweep_over_images(std::vector<ImageGroup> groups) {
  // Start from the lexicographic (f2, f1) optimum.
  std::size_t current = 0;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const auto& a = groups[i].image;
    const auto& b = groups[current].image;
    if (a.y2 < b.y2 || (a.y2 == b.y2 && a.y1 < b.y1)) current = i;
  }

  SweepResult result;
  result.adjacent_steps = false;
  std::vector<Slope> move_slopes;
  result.visited.push_back(
      {groups[current].representative, groups[current].image, {}, false});

  while (true) {
    ++result.stats.iterations;
    std::optional<std::size_t> best;
    std::optional<Slope> best_slope;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].image.y1 >= groups[current].image.y1) continue;
      Slope slope = slope_between(groups[current].image, groups[i].image);
      if (!best || slope > *best_slope ||
          (slope == *best_slope && groups[i].image.y1 < groups[*best].image.y1)) {
        best = i;
        best_slope = slope;
      }
    }
    if (!best) break;
    current = *best;
    move_slopes.push_back(*best_slope);
    result.visited.push_back(
        {groups[current].representative, groups[current].image, {}, false});
  }

  finish_sweep(result, move_slopes, Rational(0));
  return result;
}

}  // namespace

SweepResult global_esn_sweep(const std::vector<Basis>& all_bases, const BiCost& costs) {
  if (all_bases.empty()) throw InputError("global sweep needs a nonempty basis list");

  // Transitions depend only on images, so sweep over distinct images and
  // keep the smallest basis per image as representative.
  std::map<Point2, Basis> by_image;
  for (const auto& b : all_bases) {
    Point2 image = image_of(b, costs);
    auto [it, inserted] = by_image.try_emplace(image, b);
    if (!inserted && b < it->second) it->second = b;
  }
  std::vector<ImageGroup> groups;
  groups.reserve(by_image.size());
  for (auto& [image, basis] : by_image) groups.push_back({image, basis});
  return sweep_over_images(std::move(groups));
}

namespace {

struct Exchange {
  ElementId out;  // leaves the basis
  ElementId in;   // enters the basis
  Slope slope;
};

Basis apply_exchange(const Basis& b, const Exchange& exchange) {
  Basis next;
  next.elements.reserve(b.elements.size());
  for (ElementId x : b.elements) {
    if (x != exchange.out) next.elements.push_back(x);
  }
  next.elements.insert(
      std::lower_bound(next.elements.begin(), next.elements.end(), exchange.in),
      exchange.in);
  return next;
}

// All exchanges (b - e) + f whose f1 moves in the requested direction,
// with the slope between the two images. lower=true asks for f1 decreases.
std::vector<Exchange> exchanges_towards(const Matroid& instance, const Basis& b,
                                        const BiCost& costs, bool lower,
                                        NeighborMode mode, long long* tests) {
  std::vector<Exchange> result;
  const int m = instance.ground_size();

  auto consider = [&](ElementId out, ElementId in) {
    Rational d1 = costs[in].c1 - costs[out].c1;
    if (lower ? d1 >= 0 : d1 <= 0) return false;
    Rational d2 = costs[in].c2 - costs[out].c2;
    result.push_back({out, in, Slope(d2 / d1)});
    return true;
  };

  if (mode == NeighborMode::circuit) {
    for (ElementId f = 0; f < m; ++f) {
      if (b.contains(f)) continue;
      Circuit circuit = instance.fundamental_circuit(b, f, tests);
      for (ElementId e : circuit.elements) {
        if (e != f) consider(e, f);
      }
    }
  } else {
    for (ElementId f = 0; f < m; ++f) {
      if (b.contains(f)) continue;
      for (ElementId e : b.elements) {
        Rational d1 = costs[f].c1 - costs[e].c1;
        if (lower ? d1 >= 0 : d1 <= 0) continue;
        Basis candidate = apply_exchange(b, {e, f, Slope(Rational(0))});
        if (tests) ++*tests;
        if (instance.is_independent(candidate.elements)) consider(e, f);
      }
    }
  }
  return result;
}

// The sweep step: maximum slope, ties by smallest resulting y1, then by
// id-lexicographically smallest basis.
std::optional<Exchange> pick_step(const Matroid& instance, const Basis& b,
                                  const BiCost& costs, long long* tests) {
  std::vector<Exchange> candidates =
      exchanges_towards(instance, b, costs, /*lower=*/true, NeighborMode::circuit, tests);
  std::optional<Exchange> best;
  std::optional<Basis> best_basis;
  for (const auto& candidate : candidates) {
    if (best) {
      if (candidate.slope < best->slope) continue;
      if (candidate.slope == best->slope) {
        // Same slope: smaller resulting y1 means a larger c1 drop.
        Rational drop = costs[candidate.out].c1 - costs[candidate.in].c1;
        Rational best_drop = costs[best->out].c1 - costs[best->in].c1;
        if (drop < best_drop) continue;
        if (drop == best_drop) {
          Basis candidate_basis = apply_exchange(b, candidate);
          if (!(candidate_basis < *best_basis)) continue;
          best = candidate;
          best_basis = std::move(candidate_basis);
          continue;
        }
      }
    }
    best = candidate;
    best_basis = apply_exchange(b, candidate);
  }
  return best;
}

SweepResult run_adjacency_sweep(const Matroid& instance, const BiCost& costs,
                                Basis start, const Rational& first_lo) {
  SweepResult result;
  result.adjacent_steps = true;
  std::vector<Slope> move_slopes;

  Basis current = std::move(start);
  Point2 image = image_of(current, costs);
  result.visited.push_back({current, image, {}, false});

  const long long m = instance.ground_size();
  const long long iteration_guard = 2 * m * m + m + 2;
  while (true) {
    ++result.stats.iterations;
    if (result.stats.iterations > iteration_guard)
      throw LogicError("adjacency sweep exceeded its iteration bound");
    auto step = pick_step(instance, current, costs, &result.stats.independence_tests);
    if (!step) break;
    current = apply_exchange(current, *step);
    image.y1 += costs[step->in].c1 - costs[step->out].c1;
    image.y2 += costs[step->in].c2 - costs[step->out].c2;
    move_slopes.push_back(step->slope);
    result.visited.push_back({current, image, {}, false});
  }

  finish_sweep(result, move_slopes, first_lo);
  return result;
}

}  // namespace

std::vector<std::pair<Basis, Slope>> neighbors_less(const Matroid& instance,
                                                    const Basis& b, const BiCost& costs,
                                                    NeighborMode mode, long long* tests) {
  std::vector<std::pair<Basis, Slope>> neighbors;
  for (const auto& exchange :
       exchanges_towards(instance, b, costs, /*lower=*/true, mode, tests)) {
    neighbors.push_back({apply_exchange(b, exchange), exchange.slope});
  }
  return neighbors;
}

SweepResult adjacency_esn_sweep(const Matroid& instance, const BiCost& costs) {
  SolveStats setup;
  Basis start = greedy_basis(instance, lex_ordering(costs, Rational(0), Tiebreak::c1_ascending),
                             &setup.independence_tests);
  SweepResult result = run_adjacency_sweep(instance, costs, std::move(start), Rational(0));
  result.stats.independence_tests += setup.independence_tests;
  return result;
}

SweepResult start_midway_sweep(const Matroid& instance, const BiCost& costs,
                               const Basis& start) {
  // Lower end of the start's weight interval via the exchanges that increase
  // f1: the flattest such slope bounds Lambda(start) from below.
  long long tests = 0;
  Slope alpha_up(Rational(0));
  for (const auto& exchange :
       exchanges_towards(instance, start, costs, /*lower=*/false, NeighborMode::circuit,
                         &tests)) {
    if (exchange.slope < alpha_up) alpha_up = exchange.slope;
  }
  SweepResult result =
      run_adjacency_sweep(instance, costs, start, lambda_of_alpha(alpha_up));
  result.stats.independence_tests += tests;

  // A degenerate start (singleton weight set) may report an inverted first
  // interval; clamp it to the adjacent breakpoint.
  if (!result.visited.empty()) {
    auto& first = result.visited.front();
    if (first.interval.lo > first.interval.hi) {
      first.interval.lo = first.interval.hi;
      first.extreme = false;
    }
  }
  return result;
}

FrontierReport tailored_esn_sweep(const Matroid& instance, const BiCost& costs,
                                  std::vector<Basis>* trace) {
  FrontierReport report;
  EventSchedule events = build_event_schedule(critical_pairs(costs));

  Basis current = greedy_basis(
      instance, lex_ordering(costs, Rational(0), Tiebreak::c1_ascending),
      &report.stats.independence_tests);

  std::vector<Basis> bases{current};
  if (trace) trace->push_back(current);

  // Non-owning handle for building restriction/contraction views.
  MatroidPtr self(MatroidPtr{}, &instance);

  for (const auto& event : events) {
    ++report.stats.iterations;
    const auto& crossing = event.elements;

    std::vector<ElementId> kept;  // current basis without the crossing elements
    for (ElementId e : current.elements) {
      if (!std::binary_search(crossing.begin(), crossing.end(), e)) kept.push_back(e);
    }
    std::vector<ElementId> deleted;
    for (ElementId e = 0; e < instance.ground_size(); ++e) {
      if (!current.contains(e) &&
          !std::binary_search(crossing.begin(), crossing.end(), e)) {
        deleted.push_back(e);
      }
    }
    MatroidPtr view = restrict_contract(self, std::move(deleted), kept);

    // Re-add the crossing elements in (c_lambda, c1, id) order.
    std::vector<ElementId> order = crossing;
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
      Rational wa = weighted_cost(event.lambda, a, costs);
      Rational wb = weighted_cost(event.lambda, b, costs);
      if (wa != wb) return wa < wb;
      if (costs[a].c1 != costs[b].c1) return costs[a].c1 < costs[b].c1;
      return a < b;
    });

    std::vector<ElementId> added;
    for (ElementId e : order) {
      std::vector<ElementId> candidate = added;
      candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), e), e);
      ++report.stats.independence_tests;
      if (view->is_independent(candidate)) added = std::move(candidate);
    }

    std::vector<ElementId> merged = kept;
    merged.insert(merged.end(), added.begin(), added.end());
    std::sort(merged.begin(), merged.end());
    current = Basis{std::move(merged)};
    bases.push_back(current);
    if (trace) trace->push_back(current);
  }

  // Merge consecutive equal images; every merged entry spans a nonzero
  // weight interval, so the report is exactly the extreme frontier.
  std::size_t i = 0;
  while (i < bases.size()) {
    Point2 image = image_of(bases[i], costs);
    std::size_t j = i;
    while (j + 1 < bases.size() && image_of(bases[j + 1], costs) == image) ++j;
    Rational lo = (i == 0) ? Rational(0) : events[i - 1].lambda;
    Rational hi = (j + 1 < bases.size()) ? events[j].lambda : Rational(1);
    report.entries.push_back({image, bases[i], {lo, hi}});
    i = j + 1;
  }
  return report;
}

FrontierReport dichotomic_search(const Matroid& instance, const BiCost& costs) {
  FrontierReport report;
  const int m = instance.ground_size();

  // Lexicographic endpoints: bottom-right via (c2, c1), top-left via (c1, c2).
  Ordering bottom_order = lex_ordering(costs, Rational(0), Tiebreak::c1_ascending);
  Ordering top_order;
  top_order.elements.resize(m);
  for (ElementId e = 0; e < m; ++e) top_order.elements[e] = e;
  std::sort(top_order.elements.begin(), top_order.elements.end(),
            [&](ElementId a, ElementId b) {
              if (costs[a].c1 != costs[b].c1) return costs[a].c1 < costs[b].c1;
              if (costs[a].c2 != costs[b].c2) return costs[a].c2 < costs[b].c2;
              return a < b;
            });

  ++report.stats.iterations;
  Basis bottom = greedy_basis(instance, bottom_order, &report.stats.independence_tests);
  Point2 bottom_image = image_of(bottom, costs);
  ++report.stats.iterations;
  Basis top = greedy_basis(instance, top_order, &report.stats.independence_tests);
  Point2 top_image = image_of(top, costs);

  // Collected points, ordered by y1 descending (bottom-right first).
  std::vector<FrontierReport::Entry> found;
  found.push_back({bottom_image, bottom, {}});

  // Recursion over open image pairs; emits interior points right-to-left.
  auto probe = [&](auto&& self, const Point2& left, const Point2& right) -> void {
    Rational lambda = lambda_of_alpha(slope_between(right, left));
    ++report.stats.iterations;
    Basis b = greedy_basis(instance, lex_ordering(costs, lambda, Tiebreak::c1_ascending),
                           &report.stats.independence_tests);
    Point2 y = image_of(b, costs);
    if (weighted_value(lambda, y) < weighted_value(lambda, left)) {
      self(self, y, right);
      found.push_back({y, b, {}});
      self(self, left, y);
    }
  };

  if (top_image != bottom_image) {
    probe(probe, top_image, bottom_image);
    found.push_back({top_image, top, {}});
  }

  // Weight decomposition from the slopes between consecutive points.
  for (std::size_t k = 0; k < found.size(); ++k) {
    Rational lo = (k == 0) ? Rational(0)
                           : lambda_of_alpha(slope_between(found[k - 1].point, found[k].point));
    Rational hi = (k + 1 < found.size())
                      ? lambda_of_alpha(slope_between(found[k].point, found[k + 1].point))
                      : Rational(1);
    found[k].interval = {lo, hi};
  }
  report.entries = std::move(found);
  return report;
}

FrontierReport sweep_to_report(const SweepResult& sweep) {
  FrontierReport report;
  report.stats = sweep.stats;
  for (const auto& entry : sweep.visited) {
    if (entry.extreme) report.entries.push_back({entry.image, entry.basis, entry.interval});
  }
  return report;
}

}  // namespace bmwb
