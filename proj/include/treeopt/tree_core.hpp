#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treeopt {

// Malformed instance or argument (bad tree, out-of-range vertex, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds a hard size cap of an exponential algorithm or oracle.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal contract violated by a caller-supplied structure (e.g. a flow
// that does not conserve).
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TreeEdge {
  int u = 0;
  int v = 0;
  long long w = 0;
};

// Rooted tree over vertices 1..n. children lists keep input order; algorithms
// that need a sorted order sort explicitly.
struct RootedTree {
  int n = 0;
  int root = 1;
  std::vector<int> parent;                 // parent[root] == 0
  std::vector<std::vector<int>> children;  // ordered
  std::vector<long long> vertex_weight;    // empty when absent, else size n+1
  std::vector<long long> edge_weight;      // weight of (parent(i), i); empty when absent

  bool has_vertex_weights() const { return !vertex_weight.empty(); }
  bool has_edge_weights() const { return !edge_weight.empty(); }
  bool is_leaf(int v) const { return children[v].empty(); }

  // Iterative traversals (safe for deep paths).
  std::vector<int> preorder() const;
  std::vector<int> postorder() const;
  std::vector<int> depths() const;  // depth[root] = 0
};

// Builds a rooted tree from an undirected edge list. Throws InputError if the
// edges do not form a tree on n vertices. When weighted is true, edge weights
// are carried onto the child vertex of each edge.
RootedTree root_at(int n, const std::vector<TreeEdge>& edges, int r,
                   bool weighted = false);

// Builds a tree directly from a parent array (parent[root] = 0). Children
// order is increasing vertex id.
RootedTree from_parents(int n, const std::vector<int>& parent, int root);

struct DfsNumbering {
  std::vector<int> num;      // dfs_num, 1..n
  std::vector<int> max_num;  // dfs_max: max dfs number in subtree
};

DfsNumbering dfs_numbering(const RootedTree& tree);

// Euler tour + sparse table; O(n log n) build, O(1) query.
class LcaIndex {
 public:
  explicit LcaIndex(const RootedTree& tree);
  int lca(int u, int v) const;
  int depth(int v) const { return depth_[v]; }

 private:
  int n_;
  std::vector<int> depth_;
  std::vector<int> first_;            // first occurrence in the tour
  std::vector<int> tour_;             // vertex ids
  std::vector<std::vector<int>> sp_;  // sparse table of tour positions, min depth
  int shallower(int a, int b) const {
    return depth_[tour_[a]] <= depth_[tour_[b]] ? a : b;
  }
};

// Segment tree with range addition update and point query. Leaves are 1..n.
class AddSegTree {
 public:
  explicit AddSegTree(int n);
  int size() const { return n_; }
  void range_add(int l, int r, long long delta);
  long long point_query(int i) const;
  void point_set(int i, long long value);

 private:
  int n_;
  std::vector<long long> uagg_;  // pending addition aggregate per node
  std::vector<long long> base_;  // leaf initial values
};

// The pair of segment trees driving the adjacent-merge tree builder:
// tree A tracks which of the n leaves are active (rank/unrank/next_active),
// tree B tracks per-leaf combined heights hc with argmin leaf lnum.
class ActiveLeafTrees {
 public:
  static constexpr long long kInf = std::numeric_limits<long long>::max();

  explicit ActiveLeafTrees(int n);

  int leaf_count() const { return n_; }
  bool active(int i) const;
  long long nactive_root() const;

  // Number of active leaves strictly before leaf i (i must be active).
  int rank(int i) const;
  // Inverse of rank; 0 <= r < nactive_root().
  int unrank(long long r) const;
  // Next active leaf after i, or 0 when i is the last active leaf.
  int next_active(int i) const;

  void deactivate(int i);

  // hc lives on tree B, leaves 1..n-1.
  void set_hc(int i, long long v);
  long long hc(int i) const;
  // (hc, lnum) at B's root; (kInf, 0) when n < 2.
  std::pair<long long, int> min_hc() const;

 private:
  int n_;
  int sza_, szb_;  // padded sizes (powers of two)
  std::vector<long long> nactive_;
  std::vector<bool> active_;
  std::vector<long long> hc_;
  std::vector<int> lnum_;
  void pull_b(int node);
};

}  // namespace treeopt
