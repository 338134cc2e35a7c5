#pragma once

#include <utility>
#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

struct FlowEdge {
  int from = 0;
  int to = 0;
  long long lower = 0;
  long long upper = 0;
  long long cost = 0;
};

// Directed flow network on vertices 1..n with per-edge bounds and costs.
// return_edge, when >= 0, indexes the (t,s) circulation edge; it carries the
// s->t flow value and is skipped during path decomposition.
struct FlowNetwork {
  int n = 0;
  int s = 0;
  int t = 0;
  std::vector<FlowEdge> edges;
  int return_edge = -1;

  int add_edge(int u, int v, long long lb, long long ub, long long c);
};

struct FlowAssignment {
  bool feasible = false;
  std::vector<long long> flow;  // parallel to FlowNetwork::edges
  long long value = 0;
  long long cost = 0;
};

struct BoundedVertex {
  long long lbv = 0;
  long long ubv = 0;
  long long cv = 0;
  bool is_source = false;
  bool is_dest = false;
};

struct BoundedEdge {
  int u = 0;
  int v = 0;
  long long lbe = 0;
  long long ube = 0;
  long long ce = 0;
};

// Acyclic digraph with bounds and costs on both vertices and edges.
struct BoundedDigraph {
  int n = 0;
  std::vector<BoundedVertex> vertex;  // 1..n, index 0 unused
  std::vector<BoundedEdge> edges;
};

struct StreamPlan {
  bool feasible = false;
  long long p = 0;
  std::vector<std::vector<int>> paths;  // each from a source to a destination
  long long cost_s = 0;
};

struct PathCover {
  long long p = 0;
  std::vector<std::vector<int>> paths;
};

// Min-cost max-flow on a network whose lower bounds are all zero.
// Integral; among maximum flows the total cost is minimum.
FlowAssignment min_cost_max_flow(const FlowNetwork& net);

// Feasible flow with lower bounds: shifted capacities plus auxiliary s'/t'
// supply/demand edges, then one min-cost max-flow run. Infeasible is a result.
FlowAssignment feasible_flow(const FlowNetwork& f, int s, int t);

// Minimum-value feasible flow: binary search on the capacity x of a
// (snew, s) edge, feasibility tested cost-free, one final min-cost pass.
FlowAssignment min_feasible_flow(const FlowNetwork& f, int s, int t);

// Standard vertex-splitting reduction: vertex bounds become (u_in, u_out)
// edge bounds; sources/destinations hook to fresh s and t.
FlowNetwork split_vertices(const BoundedDigraph& g);

// Minimum number of unicast streams plus the cheapest path system at that
// count. Infeasible is a result.
StreamPlan min_streams(const BoundedDigraph& g);

// Decomposes an integral feasible flow into value-many unit s->t paths whose
// per-edge multiplicities equal the flow (return edge excluded). A flow that
// is not path-decomposable raises ContractError.
std::vector<std::vector<int>> decompose_paths(const FlowNetwork& f,
                                              const FlowAssignment& fa);

// Minimum path cover of a DAG via bipartite matching; p = n - matching size.
PathCover min_path_cover(int n, const std::vector<std::pair<int, int>>& edges);

// Structural check: bounds on every edge and conservation outside {s, t}.
bool check_flow(const FlowNetwork& f, const FlowAssignment& fa);

}  // namespace treeopt
