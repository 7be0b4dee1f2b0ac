#pragma once

// Shared test helpers: the two bundled example instances built in code, plus
// small conveniences for exact points and random instances.

#include "bmwb/io.hpp"
#include "bmwb/oracle.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace bmwb::testing {

// Five-vertex graph made of two triangles sharing vertex 2. Element ids:
// 0:(0,1) 1:(0,2) 2:(1,2) 3:(2,3) 4:(2,4) 5:(3,4).
inline MatroidPtr two_triangle_graph() {
  return std::make_shared<GraphicMatroid>(
      5, std::vector<std::pair<int, int>>{
             {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Frontier with three extreme points (6,2), (2,6), (1,10) and a supported
// non-extreme point (4,4).
inline BiCost fig1_costs() {
  return {{-1, 4}, {0, 0}, {0, 0}, {0, 4}, {4, 0}, {2, 2}};
}

// Collinear frontier: five nondominated points on y1 + y2 = 16, only the
// endpoints (12,4) and (4,12) extreme.
inline BiCost collinear_costs() {
  return {{2, 2}, {0, 4}, {4, 0}, {0, 4}, {4, 0}, {2, 2}};
}

inline Point2 pt(long long y1, long long y2) {
  return {Rational(y1), Rational(y2)};
}

inline Rational rat(const std::string& text) { return parse_rational(text); }

inline std::set<Point2> extreme_images(const SweepResult& sweep) {
  std::set<Point2> images;
  for (const auto& entry : sweep.visited) {
    if (entry.extreme) images.insert(entry.image);
  }
  return images;
}

inline std::set<Point2> report_images(const FrontierReport& report) {
  std::set<Point2> images;
  for (const auto& entry : report.entries) images.insert(entry.point);
  return images;
}

inline ParsedInstance random_instance(std::uint64_t seed, const GenParams& params) {
  std::stringstream doc(generate_instance(seed, params).dump());
  return parse_instance(doc);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(BMWB_FIXTURE_DIR) + "/" + name;
}

}  // namespace bmwb::testing
