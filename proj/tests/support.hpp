#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "duval/dual_graph.hpp"

namespace testing {

/// Every ADE diagram with at most max_vertices vertices.
inline std::vector<duval::DynkinLabel> ade_labels(int max_vertices) {
  std::vector<duval::DynkinLabel> out;
  for (int n = 1; n <= max_vertices; ++n) out.push_back({duval::DynkinType::A, n});
  for (int n = 4; n <= max_vertices; ++n) out.push_back({duval::DynkinType::D, n});
  for (int n = 6; n <= std::min(8, max_vertices); ++n) out.push_back({duval::DynkinType::E, n});
  return out;
}

inline bool close_rel(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace testing
