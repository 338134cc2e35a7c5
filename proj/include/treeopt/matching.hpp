#pragma once

#include <utility>
#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

struct WeightedMatchingResult {
  long long weight = 0;
  std::vector<std::pair<int, int>> edges;
};

struct PowerMatchingResult {
  std::vector<std::pair<int, int>> edges;
  std::vector<char> matched;  // 1..n
};

// Maximum-weight matching in the extended tree: tree edges plus same-parent
// sibling pairs, edge weight |w(x)-w(y)|. Interval DP over weight-sorted
// sons, O(n^2) total; edges recovered by traceback.
WeightedMatchingResult extended_tree_max_weight_matching(const RootedTree& t);

// Maximum matching in the k-th power (k >= 2) of the tree: greedy pairing of
// unmatched sons, leftover son paired with the parent. Always |edges|=n/2.
PowerMatchingResult power_matching(const RootedTree& t, int k);

}  // namespace treeopt
