#pragma once

#include <functional>
#include <tuple>
#include <utility>
#include <vector>

#include "treeopt/cycle_completion.hpp"
#include "treeopt/flownet.hpp"
#include "treeopt/partitioning.hpp"
#include "treeopt/spanning.hpp"
#include "treeopt/tree_core.hpp"

namespace treeopt {

// Exhaustive references, deliberately independent of the fast algorithms.
// Every oracle enforces a hard size cap with ResourceLimitError.

// 2^m subset scan over the candidate extra edges; m <= 18.
CycleCompletionResult brute_cycle_completion(const RootedTree& tree,
                                             const std::vector<ExtraEdge>& extras);

// Unit-weight any-pair model: scan kept-tree-edge subsets; n <= 16.
// chosen_edges is left empty; total_weight is the minimum edge count.
CycleCompletionResult brute_unit_cycle_completion(const RootedTree& tree);

// All ways to pick k disjoint connected subsets of the given sizes; n <= 12.
ConnectedPartitionResult brute_connected_partition(const RootedTree& tree,
                                                   const ConnectedPartSpec& spec);

// Max over all n! orderings of the first-fit color count; n <= 8.
int brute_grundy(const std::vector<std::vector<int>>& adj);

// Exact maximum-weight matching by branching on the lowest free vertex;
// n <= 12. Edges are (u, v, w).
long long brute_max_weight_matching(
    int n, const std::vector<std::tuple<int, int, long long>>& edges);

// Path-multiset enumeration, minimum p then minimum cost; <= 5 vertices,
// all bounds <= 2.
StreamPlan brute_min_streams(const BoundedDigraph& g);

// Spanning-tree enumeration filtered to degree k at r; n <= 7, m <= 24.
DcmstResult brute_spanning_trees(const WeightedGraph& g, int r, int k);

// All n^(n-2) Pruefer sequences decoded to edge lists; n <= 9.
void enumerate_labeled_trees(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

// Canonical level-sequence enumeration of unlabeled rooted trees; n <= 14.
// Each tree is reported as a parent array (root = 1, parent[1] = 0).
void enumerate_unlabeled_rooted(
    int n, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace treeopt
