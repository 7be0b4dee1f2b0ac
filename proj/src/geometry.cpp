#include "bmwb/geometry.hpp"

#include "bmwb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bmwb {

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& part) -> BigInt {
    if (part.empty()) throw ParseError("empty rational component in '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ParseError("sign without digits in '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw ParseError("invalid rational literal '" + text + "'");
    }
    return BigInt(part);
  };

  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive in '" + text + "'");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

const Rational& Slope::value() const {
  if (!finite_) throw LogicError("value() on -infinity slope");
  return value_;
}

Rational weighted_cost(const Rational& lambda, ElementId e, const BiCost& costs) {
  if (lambda < 0 || lambda > 1) throw InputError("lambda outside [0, 1]");
  if (e < 0 || static_cast<std::size_t>(e) >= costs.size())
    throw InputError("element id out of range");
  return lambda * costs[e].c1 + (1 - lambda) * costs[e].c2;
}

Rational weighted_value(const Rational& lambda, const Point2& y) {
  return lambda * y.y1 + (1 - lambda) * y.y2;
}

Slope slope_between(const Point2& y_from, const Point2& y_to) {
  if (y_to.y1 == y_from.y1) throw InputError("slope undefined: equal y1 coordinates");
  return Slope((y_to.y2 - y_from.y2) / (y_to.y1 - y_from.y1));
}

Slope alpha_of_lambda(const Rational& lambda) {
  if (lambda < 0 || lambda > 1) throw InputError("lambda outside [0, 1]");
  if (lambda == 1) return Slope::negative_infinity();
  return Slope(-lambda / (1 - lambda));
}

Rational lambda_of_alpha(const Slope& alpha) {
  if (alpha.is_negative_infinity()) return Rational(1);
  if (alpha.value() > 0) throw InputError("alpha must be nonpositive");
  return alpha.value() / (alpha.value() - 1);
}

std::vector<CriticalPair> critical_pairs(const BiCost& costs) {
  std::vector<CriticalPair> pairs;
  const int m = static_cast<int>(costs.size());
  for (ElementId e = 0; e < m; ++e) {
    for (ElementId f = 0; f < m; ++f) {
      if (costs[e].c1 > costs[f].c1 && costs[e].c2 < costs[f].c2) {
        Rational d2 = costs[f].c2 - costs[e].c2;
        Rational d1 = costs[e].c1 - costs[f].c1;
        pairs.push_back({e, f, d2 / (d2 + d1)});
      }
    }
  }
  return pairs;
}

EventSchedule build_event_schedule(const std::vector<CriticalPair>& pairs) {
  std::map<Rational, std::set<ElementId>> grouped;
  for (const auto& p : pairs) {
    grouped[p.lambda].insert(p.e);
    grouped[p.lambda].insert(p.f);
  }
  EventSchedule schedule;
  schedule.reserve(grouped.size());
  for (auto& [lambda, elements] : grouped) {
    schedule.push_back({lambda, std::vector<ElementId>(elements.begin(), elements.end())});
  }
  return schedule;
}

std::vector<Point2> nondominated_filter(const std::vector<Point2>& points) {
  std::vector<Point2> unique(points);
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<Point2> result;
  for (const auto& y : unique) {
    bool dominated = false;
    for (const auto& other : unique) {
      if (other.y1 <= y.y1 && other.y2 <= y.y2 && other != y) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.push_back(y);
  }
  return result;
}

namespace {

// Cross product of (b - a) and (c - a).
Rational cross(const Point2& a, const Point2& b, const Point2& c) {
  return (b.y1 - a.y1) * (c.y2 - a.y2) - (b.y2 - a.y2) * (c.y1 - a.y1);
}

// Vertices of the lower-left boundary of conv(points) + R^2_{>=0}, i.e. the
// strictly convex chain through the nondominated points sorted by y1.
std::vector<Point2> lower_hull_vertices(const std::vector<Point2>& nondominated) {
  std::vector<Point2> hull;
  for (const auto& p : nondominated) {
    // Pop the previous vertex while it is on or above the segment to p.
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], p, hull[hull.size() - 1]) >= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

std::vector<PointClass> classify_frontier(const std::vector<Point2>& points) {
  const std::vector<Point2> nd = nondominated_filter(points);
  const std::vector<Point2> hull = lower_hull_vertices(nd);

  std::set<Point2> nd_set(nd.begin(), nd.end());
  std::set<Point2> hull_set(hull.begin(), hull.end());

  auto on_hull_segment = [&](const Point2& y) {
    // y is nondominated and not a vertex; it is supported iff it lies on the
    // segment between the enclosing pair of hull vertices.
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
      if (hull[i].y1 < y.y1 && y.y1 < hull[i + 1].y1) {
        return cross(hull[i], hull[i + 1], y) == 0;
      }
    }
    return false;
  };

  std::vector<PointClass> labels;
  labels.reserve(points.size());
  for (const auto& y : points) {
    if (!nd_set.count(y)) {
      labels.push_back(PointClass::dominated);
    } else if (hull_set.count(y)) {
      labels.push_back(PointClass::extreme_supported);
    } else if (on_hull_segment(y)) {
      labels.push_back(PointClass::supported_nonextreme);
    } else {
      labels.push_back(PointClass::nondominated_unsupported);
    }
  }
  return labels;
}

WeightInterval weight_interval(const Slope& alpha_up, const Slope& alpha_down) {
  if (alpha_up < alpha_down) throw LogicError("inverted weight interval bounds");
  WeightInterval interval{lambda_of_alpha(alpha_up), lambda_of_alpha(alpha_down)};
  if (interval.lo > interval.hi) throw LogicError("inverted weight interval");
  return interval;
}

}  // namespace bmwb
