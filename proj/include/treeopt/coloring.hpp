#pragma once

#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

struct GrundyResult {
  std::vector<int> c1;      // vertex -> color, tree rooted at r
  std::vector<int> cmax;    // vertex -> worst-case color as last-colored root
  std::vector<int> colmax;  // vertex i -> colmax(parent(i), i); 0 at the root
  int grundy = 0;           // max over cmax
};

// One run of the first-fit heuristic over the given vertex order.
std::vector<int> first_fit_color(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& order);

// Worst-case first-fit colors for every vertex: bottom-up c1 pass plus a
// top-down rerooting pass. O(n log n).
GrundyResult grundy_all(const RootedTree& t);

}  // namespace treeopt
