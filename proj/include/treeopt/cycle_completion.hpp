#pragma once

#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

// Candidate extra edge between two vertices that are not adjacent in the tree.
struct ExtraEdge {
  int u = 0;
  int v = 0;
  long long w = 1;
};

struct CycleCompletionResult {
  bool feasible = false;
  long long total_weight = 0;  // meaningful iff feasible
  std::vector<ExtraEdge> chosen_edges;
};

struct MinimaxResult {
  bool feasible = false;
  long long w_max = 0;  // meaningful iff feasible
  std::vector<ExtraEdge> chosen_edges;
};

// Unit-weight greedy where any non-tree pair may be connected. Minimizes the
// number of added edges; infeasibility is a result, not an error.
CycleCompletionResult greedy_unit_any_pair(const RootedTree& tree);

// O(n^2) dynamic program over the given candidate edges.
CycleCompletionResult solve_quadratic(const RootedTree& tree,
                                      const std::vector<ExtraEdge>& extras);

// O((n+m) log n) variant: extras bucketed by LCA, path sums maintained
// incrementally in a range-add/point-query segment tree over DFS numbers.
CycleCompletionResult solve_fast(const RootedTree& tree,
                                 const std::vector<ExtraEdge>& extras);

// Minimize the largest added weight: binary search over the distinct extra
// weights with solve_fast as the feasibility test.
MinimaxResult solve_minimax(const RootedTree& tree,
                            const std::vector<ExtraEdge>& extras);

// Validity check: every vertex is contained in the tree path of exactly one
// chosen edge (the fundamental cycles are vertex-disjoint and cover the tree).
bool covers_exactly_once(const RootedTree& tree,
                         const std::vector<ExtraEdge>& chosen);

}  // namespace treeopt
