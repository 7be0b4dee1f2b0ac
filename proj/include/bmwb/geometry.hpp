#pragma once

#include "bmwb/rational.hpp"

#include <cstdint>
#include <vector>

namespace bmwb {

using ElementId = int;

/// Per-element cost pair (c1, c2).
struct CostPair {
  Rational c1;
  Rational c2;
};

/// Cost pairs indexed by ElementId; one entry per ground-set element.
using BiCost = std::vector<CostPair>;

/// A point in objective space.
struct Point2 {
  Rational y1;
  Rational y2;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.y1 == b.y1 && a.y2 == b.y2;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.y1 != b.y1) return a.y1 < b.y1;
    return a.y2 < b.y2;
  }
};

// Slope of a segment in objective space, or the symbol -infinity used as the
// image of lambda = 1 under alpha. Finite slopes are exact rationals.
class Slope {
 public:
  Slope() = default;
  explicit Slope(Rational value) : finite_(true), value_(std::move(value)) {}

  static Slope negative_infinity() { return Slope(Tag{}); }

  bool is_negative_infinity() const { return !finite_; }
  const Rational& value() const;

  friend bool operator==(const Slope& a, const Slope& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator<(const Slope& a, const Slope& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Slope& a, const Slope& b) { return a < b || a == b; }
  friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
  friend bool operator>=(const Slope& a, const Slope& b) { return b <= a; }

 private:
  struct Tag {};
  explicit Slope(Tag) : finite_(false) {}

  bool finite_ = true;
  Rational value_;
};

/// Closed subinterval [lo, hi] of the weight set [0, 1].
struct WeightInterval {
  Rational lo;
  Rational hi;

  friend bool operator==(const WeightInterval& a, const WeightInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const WeightInterval& a, const WeightInterval& b) {
    return !(a == b);
  }
};

/// Ordered element pair whose lambda-parameterised costs cross inside (0, 1).
struct CriticalPair {
  ElementId e;  // c1(e) > c1(f)
  ElementId f;  // c2(e) < c2(f)
  Rational lambda;
};

/// One event of the tailored sweep: a crossing value with every element that
/// participates in some pair crossing there.
struct ScheduleEvent {
  Rational lambda;
  std::vector<ElementId> elements;  // sorted, nonempty
};

/// Distinct crossing values in ascending order.
using EventSchedule = std::vector<ScheduleEvent>;

enum class PointClass {
  dominated,
  nondominated_unsupported,
  supported_nonextreme,
  extreme_supported,
};

/// lambda * c1(e) + (1 - lambda) * c2(e), exact.
Rational weighted_cost(const Rational& lambda, ElementId e, const BiCost& costs);

/// lambda * y1 + (1 - lambda) * y2, exact.
Rational weighted_value(const Rational& lambda, const Point2& y);

/// Slope of the segment from y_from to y_to; requires distinct y1 values.
Slope slope_between(const Point2& y_from, const Point2& y_to);

/// alpha(lambda) = -lambda / (1 - lambda), with alpha(1) = -infinity.
Slope alpha_of_lambda(const Rational& lambda);

/// lambda(alpha) = alpha / (alpha - 1), with lambda(-infinity) = 1.
Rational lambda_of_alpha(const Slope& alpha);

/// All pairs (e, f) with c1(e) > c1(f) and c2(e) < c2(f), together with the
/// unique crossing value lambda(e, f) in (0, 1).
std::vector<CriticalPair> critical_pairs(const BiCost& costs);

/// Groups critical pairs by crossing value; events sorted ascending.
EventSchedule build_event_schedule(const std::vector<CriticalPair>& pairs);

/// Nondominated subset of the input, duplicates collapsed, sorted by y1.
std::vector<Point2> nondominated_filter(const std::vector<Point2>& points);

/// One label per input point. Extreme-supported points are the vertices of
/// the lower-left boundary of the convex hull; supported non-extreme points
/// lie strictly inside a boundary segment.
std::vector<PointClass> classify_frontier(const std::vector<Point2>& points);

/// [lambda(alpha_up), lambda(alpha_down)]; requires alpha_down <= alpha_up.
WeightInterval weight_interval(const Slope& alpha_up, const Slope& alpha_down);

}  // namespace bmwb
