#include "treeopt/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace treeopt {

namespace {

long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(
                                                 hi - lo + 1));
}

}  // namespace

RootedTree gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("tree size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<TreeEdge> edges;
  if (n == 2) edges.push_back({1, 2, 1});
  if (n > 2) {
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(pick(rng, 1, n));
    std::vector<int> deg(n + 1, 1);
    for (int x : pruefer) ++deg[x];
    for (int x : pruefer) {
      int leaf = 0;
      for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) { leaf = v; break; }
      edges.push_back({leaf, x, 1});
      deg[leaf] = 0;
      --deg[x];
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) (a == 0 ? a : b) = v;
    edges.push_back({a, b, 1});
  }
  return root_at(n, edges, 1, false);
}

BoundedDigraph gen_bounded_dag(int n, std::uint64_t seed,
                               long long bound_cap) {
  if (n < 1) throw InputError("graph size must be positive");
  if (bound_cap < 1) throw InputError("bound cap must be positive");
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[pick(rng, 0, i)]);

  BoundedDigraph g;
  g.n = n;
  g.vertex.assign(n + 1, {});
  for (int u = 1; u <= n; ++u) {
    BoundedVertex& v = g.vertex[u];
    v.ubv = pick(rng, 1, bound_cap);
    v.lbv = rng() % 3 == 0 ? pick(rng, 0, v.ubv) : 0;
    v.cv = pick(rng, 0, 3);
    v.is_source = rng() % 3 == 0;
    v.is_dest = rng() % 3 == 0;
  }
  g.vertex[order[0]].is_source = true;
  g.vertex[order[n - 1]].is_dest = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() % 2) continue;
      BoundedEdge e;
      e.u = order[i];
      e.v = order[j];
      e.ube = pick(rng, 1, bound_cap);
      e.lbe = rng() % 3 == 0 ? pick(rng, 0, e.ube) : 0;
      e.ce = pick(rng, 0, 3);
      g.edges.push_back(e);
    }
  return g;
}

WeightedGraph gen_weighted_graph(int n, int extra_edges, long long wmax,
                                 std::uint64_t seed) {
  if (n < 1) throw InputError("graph size must be positive");
  if (wmax < 1) throw InputError("maximum weight must be positive");
  std::mt19937_64 rng(seed);
  WeightedGraph g;
  g.n = n;
  for (int v = 2; v <= n; ++v) {
    int u = static_cast<int>(pick(rng, 1, v - 1));
    g.edges.push_back({u, v, pick(rng, 1, wmax)});
  }
  for (int e = 0; e < extra_edges && n >= 2; ++e) {
    int u = static_cast<int>(pick(rng, 1, n));
    int v = static_cast<int>(pick(rng, 1, n - 1));
    if (v >= u) ++v;
    g.edges.push_back({u, v, pick(rng, 1, wmax)});
  }
  return g;
}

LeafSeq gen_leaf_seq(int n, long long hmax, std::uint64_t seed) {
  if (n < 1) throw InputError("leaf count must be positive");
  if (hmax < 0) throw InputError("maximum height must be nonnegative");
  std::mt19937_64 rng(seed);
  LeafSeq seq;
  seq.h.resize(n);
  for (long long& x : seq.h) x = pick(rng, 0, hmax);
  return seq;
}

}  // namespace treeopt
