#include "treeopt/spanning.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <tuple>

namespace treeopt {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n + 1) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

void validate_graph(const WeightedGraph& g, int r) {
  if (g.n < 1) throw InputError("graph needs at least one vertex");
  if (r < 1 || r > g.n) throw InputError("special vertex out of range");
  Dsu dsu(g.n);
  int comps = g.n;
  for (const auto& e : g.edges) {
    if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
      throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loops are not allowed");
    if (e.w <= 0) throw InputError("edge weights must be positive");
    if (dsu.unite(e.u, e.v)) --comps;
  }
  if (comps != 1) throw InputError("graph must be connected");
}

bool touches(const WEdge& e, int r) { return e.u == r || e.v == r; }

}  // namespace

MstParamResult mst_with_param(const WeightedGraph& g, int r, long long d,
                              REdgeBias bias) {
  validate_graph(g, r);
  int m = static_cast<int>(g.edges.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    bool isr = touches(g.edges[i], r);
    long long c = g.edges[i].w + (isr ? d : 0);
    int flag = (bias == REdgeBias::kPrefer) ? (isr ? 0 : 1) : (isr ? 1 : 0);
    return std::make_tuple(c, flag, i);
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key(a) < key(b); });
  MstParamResult res;
  Dsu dsu(g.n);
  for (int i : order) {
    if (!dsu.unite(g.edges[i].u, g.edges[i].v)) continue;
    res.edge_indices.push_back(i);
    if (touches(g.edges[i], r)) ++res.ne;
  }
  assert(static_cast<int>(res.edge_indices.size()) == g.n - 1);
  return res;
}

DcmstResult dcmst(const WeightedGraph& g, int r, int k) {
  validate_graph(g, r);
  int deg_r = 0;
  for (const auto& e : g.edges)
    if (touches(e, r)) ++deg_r;
  if (k < 1 || k > deg_r)
    throw InputError("k must be between 1 and the degree of r");

  long long dmax = 0;
  for (const auto& e : g.edges) dmax = std::max(dmax, e.w);
  ++dmax;

  std::vector<std::pair<long long, int>> probes;  // (d, ne) with avoid bias
  auto ne_avoid = [&](long long d) {
    int ne = mst_with_param(g, r, d, REdgeBias::kAvoid).ne;
    probes.emplace_back(d, ne);
    return ne;
  };

  DcmstResult res;
  {
    MstParamResult most = mst_with_param(g, r, -dmax, REdgeBias::kPrefer);
    if (most.ne < k) {
      res.diagnostic = "even the r-heaviest spanning tree has degree " +
                       std::to_string(most.ne) + " at r";
      return res;
    }
  }
  if (ne_avoid(dmax) > k) {
    res.diagnostic = "every spanning tree has degree greater than " +
                     std::to_string(k) + " at r";
    return res;
  }

  // Smallest d with ne(d) <= k; ne is nonincreasing in d.
  long long lo = -dmax, hi = dmax;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (ne_avoid(mid) <= k) hi = mid; else lo = mid + 1;
  }
  long long dopt = lo;
  std::sort(probes.begin(), probes.end());
  for (size_t i = 1; i < probes.size(); ++i)
    if (probes[i].second > probes[i - 1].second)
      throw ContractError("ne(d) is not nonincreasing at the probe points");

  MstParamResult at_opt = mst_with_param(g, r, dopt, REdgeBias::kAvoid);
  std::vector<int> chosen;  // r-edges forced into the final tree
  for (int i : at_opt.edge_indices)
    if (touches(g.edges[i], r)) chosen.push_back(i);

  if (at_opt.ne < k) {
    // Cost-neutral swaps at the tie value dopt: the r-edges of the
    // r-preferring MST at dopt extend the forced set without changing the
    // parametrized optimum.
    MstParamResult wide = mst_with_param(g, r, dopt, REdgeBias::kPrefer);
    std::set<int> s_opt(chosen.begin(), chosen.end());
    std::set<int> s_wide;
    for (int i : wide.edge_indices)
      if (touches(g.edges[i], r)) s_wide.insert(i);
    for (int i : chosen)
      if (!s_wide.count(i))
        throw ContractError(
            "r-avoiding MST edges at dopt are not nested in the r-preferring "
            "ones");
    // Extras in Kruskal acceptance order; skip edges parallel to a chosen one.
    std::set<int> other_end;
    for (int i : chosen)
      other_end.insert(g.edges[i].u == r ? g.edges[i].v : g.edges[i].u);
    for (int i : wide.edge_indices) {
      if (static_cast<int>(chosen.size()) == k) break;
      if (!touches(g.edges[i], r) || s_opt.count(i)) continue;
      int j = g.edges[i].u == r ? g.edges[i].v : g.edges[i].u;
      if (other_end.count(j)) continue;
      chosen.push_back(i);
      other_end.insert(j);
    }
    if (static_cast<int>(chosen.size()) != k) {
      res.diagnostic =
          "no parameter value yields degree k and the r-preferring MST at "
          "dopt offers too few extra r-edges";
      return res;
    }
  }

  // Final pass: chosen r-edges at cost 0, all other r-edges excluded.
  std::sort(chosen.begin(), chosen.end());
  std::set<int> forced(chosen.begin(), chosen.end());
  int m = static_cast<int>(g.edges.size());
  std::vector<int> order;
  order.reserve(m);
  for (int i = 0; i < m; ++i)
    if (forced.count(i) || !touches(g.edges[i], r)) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    long long ca = forced.count(a) ? 0 : g.edges[a].w;
    long long cb = forced.count(b) ? 0 : g.edges[b].w;
    return std::tie(ca, a) < std::tie(cb, b);
  });
  Dsu dsu(g.n);
  for (int i : order) {
    if (!dsu.unite(g.edges[i].u, g.edges[i].v)) continue;
    res.edge_indices.push_back(i);
    res.total_weight += g.edges[i].w;
    if (touches(g.edges[i], r)) ++res.degree_r;
  }
  if (static_cast<int>(res.edge_indices.size()) != g.n - 1 ||
      res.degree_r != k)
    throw ContractError("final spanning tree misses the degree target");
  res.feasible = true;
  return res;
}

}  // namespace treeopt
