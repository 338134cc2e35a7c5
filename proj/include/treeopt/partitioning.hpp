#pragma once

#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

struct Partition {
  bool feasible = false;
  int part_count = 0;
  std::vector<int> part;            // vertex -> part id (1..part_count)
  std::vector<int> representative;  // part id -> vertex (index 1..part_count)
};

// Greedy partitioning with every part size in [Q, 3Q-3] (size >= 1 when Q=1).
// Each part plus its representative vertex induces a connected subtree.
// Returns feasible=false when n < Q.
Partition partition_bounded(const RootedTree& tree, long long q);

struct ConnectedPartSpec {
  int k = 0;
  std::vector<int> sz;        // nondecreasing, sz[1..k] (index 0 unused)
  std::vector<long long> cv;  // vertex costs, 1..n
  std::vector<long long> ce;  // cost of (parent(i), i), indexed by child i
};

struct ConnectedPartitionResult {
  bool feasible = false;
  long long min_cost = 0;
  std::vector<int> assignment;  // vertex -> part id, 0 = not in any part
};

// Hard cap on the part count: the DP is O(n^3 * 3^k).
inline constexpr int kMaxConnectedParts = 12;

// Exact minimum-cost extraction of k connected parts of the given sizes.
// Cost = sum of cv over vertices outside every part plus sum of ce over
// edges not internal to a part.
ConnectedPartitionResult partition_connected(const RootedTree& tree,
                                             const ConnectedPartSpec& spec);

// Structural check used by tests and the CLI before emission.
bool validate_partition(const RootedTree& tree, const Partition& p, long long q);
bool validate_connected_partition(const RootedTree& tree,
                                  const ConnectedPartSpec& spec,
                                  const ConnectedPartitionResult& r);

}  // namespace treeopt
