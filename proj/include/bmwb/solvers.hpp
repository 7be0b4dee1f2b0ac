#pragma once

#include "bmwb/geometry.hpp"
#include "bmwb/matroid.hpp"

#include <utility>
#include <vector>

namespace bmwb {

/// A permutation of all element ids.
struct Ordering {
  std::vector<ElementId> elements;
};

enum class Tiebreak { c1_ascending, c1_descending };

struct SolveStats {
  long long iterations = 0;
  long long independence_tests = 0;
};

struct SweepEntry {
  Basis basis;
  Point2 image;
  WeightInterval interval;
  bool extreme = false;
};

// Ordered trace of a sweep: visited supported efficient bases with their
// weight-set intervals. Images have strictly decreasing y1 along the list
// and breakpoints are nondecreasing.
struct SweepResult {
  std::vector<SweepEntry> visited;
  std::vector<Rational> breakpoints;
  SolveStats stats;
  bool adjacent_steps = false;  // consecutive bases differ in one element
};

// Image-keyed frontier: one representative basis per extreme-supported
// point, intervals chaining over [0, 1]. Entries are ordered by interval,
// so y1 strictly decreases and y2 strictly increases along the list.
struct FrontierReport {
  struct Entry {
    Point2 point;
    Basis representative;
    WeightInterval interval;
  };
  std::vector<Entry> entries;
  SolveStats stats;
};

/// Greedy: scan elements in order, keep each whose addition stays
/// independent. Adds one oracle query per element to *tests when given.
Basis greedy_basis(const Matroid& instance, const Ordering& ordering,
                   long long* tests = nullptr);

/// Nondescending by c_lambda, ties by c1 (ascending or descending), residual
/// ties by element id ascending.
Ordering lex_ordering(const BiCost& costs, const Rational& lambda, Tiebreak tiebreak);

/// Sweep over an explicit basis list: start from the lexicographic (f2, f1)
/// optimum and repeatedly move to a maximum-slope point strictly to the
/// left. Ties pick the smallest y1, then the id-lexicographically smallest
/// basis. Oracle-scale only.
SweepResult global_esn_sweep(const std::vector<Basis>& all_bases, const BiCost& costs);

enum class NeighborMode {
  circuit,    // one fundamental circuit per non-basis element
  raw_pairs,  // test every (e, f) exchange directly (debug)
};

/// Adjacent bases (b - e) + f with strictly smaller f1, each with its slope
/// towards b.
std::vector<std::pair<Basis, Slope>> neighbors_less(
    const Matroid& instance, const Basis& b, const BiCost& costs,
    NeighborMode mode = NeighborMode::circuit, long long* tests = nullptr);

/// Same contract as the global sweep but each step maximises slope over the
/// adjacent bases only; never enumerates the basis set.
SweepResult adjacency_esn_sweep(const Matroid& instance, const BiCost& costs);

/// Adjacency sweep starting from a caller-supplied supported efficient
/// basis; covers the extreme points with y2 >= f2(start).
SweepResult start_midway_sweep(const Matroid& instance, const BiCost& costs,
                               const Basis& start);

/// Event-driven sweep: per crossing value, drop the crossing elements and
/// greedily re-add them in (c_lambda, c1) order through a restriction/
/// contraction view. When given, *trace receives the basis after every
/// event (including the initial one).
FrontierReport tailored_esn_sweep(const Matroid& instance, const BiCost& costs,
                                  std::vector<Basis>* trace = nullptr);

/// Classic recursive frontier search probing the weighted-sum problem at the
/// slope between two known extreme images.
FrontierReport dichotomic_search(const Matroid& instance, const BiCost& costs);

/// Drops non-extreme entries of a sweep and reshapes it as a report.
FrontierReport sweep_to_report(const SweepResult& sweep);

}  // namespace bmwb
