#pragma once

#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

struct LeafSeq {
  std::vector<long long> h;  // heights of the n leaves, in order
};

// Strict binary tree over an ordered leaf sequence. Leaves are nodes 1..n,
// internal nodes n+1..2n-1; left/right are 0 for leaves.
struct BuiltTree {
  int n_leaves = 0;
  int root = 0;
  std::vector<int> left;
  std::vector<int> right;
  std::vector<long long> height;
  long long stack_pushes = 0;  // build_linear instrumentation
  long long stack_pops = 0;
};

// O(n^3) interval DP; serves as ground truth for the two builders.
long long hmin_dp(const LeafSeq& seq);

// Linear rightmost-path construction (amortized stack discipline).
BuiltTree build_linear(const LeafSeq& seq);

// O(n log n) ordered Huffman-like adjacent merging over two segment trees.
BuiltTree build_mergesim(const LeafSeq& seq);

// Strictness, the inorder leaf order and the height recurrence.
bool validate_built_tree(const LeafSeq& seq, const BuiltTree& t);

}  // namespace treeopt
