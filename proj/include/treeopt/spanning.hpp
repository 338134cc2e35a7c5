#pragma once

#include <string>
#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

struct WEdge {
  int u = 0;
  int v = 0;
  long long w = 0;
};

// Undirected connected graph; parallel edges are permitted, self-loops not.
struct WeightedGraph {
  int n = 0;
  std::vector<WEdge> edges;
};

enum class REdgeBias { kPrefer, kAvoid };

struct MstParamResult {
  std::vector<int> edge_indices;  // n-1 edges into WeightedGraph::edges
  int ne = 0;                     // number of edges incident to r
};

struct DcmstResult {
  bool feasible = false;
  std::vector<int> edge_indices;
  long long total_weight = 0;
  int degree_r = 0;
  std::string diagnostic;  // set when infeasible for a non-obvious reason
};

// Kruskal under shifted costs c(r,j) = d + w(r,j), deterministic tie-break
// by (shifted cost, r-edge bias, edge index).
MstParamResult mst_with_param(const WeightedGraph& g, int r, long long d,
                              REdgeBias bias);

// Minimum spanning tree in which vertex r has degree exactly k.
DcmstResult dcmst(const WeightedGraph& g, int r, int k);

}  // namespace treeopt
