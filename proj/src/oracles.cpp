#include "treeopt/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace treeopt {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

std::vector<int> climb_path(const RootedTree& t, const std::vector<int>& depth,
                            int a, int b) {
  std::vector<int> path;
  while (a != b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    path.push_back(a);
    a = t.parent[a];
  }
  path.push_back(a);
  return path;
}

}  // namespace

CycleCompletionResult brute_cycle_completion(
    const RootedTree& t, const std::vector<ExtraEdge>& extras) {
  int m = static_cast<int>(extras.size());
  if (m > 18) throw ResourceLimitError("cycle oracle is capped at 18 extras");
  std::vector<int> depth = t.depths();
  std::vector<std::vector<int>> paths(m);
  for (int e = 0; e < m; ++e)
    paths[e] = climb_path(t, depth, extras[e].u, extras[e].v);

  CycleCompletionResult best;
  std::vector<int> count(t.n + 1, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::fill(count.begin(), count.end(), 0);
    long long w = 0;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) {
        w += extras[e].w;
        for (int v : paths[e]) ++count[v];
      }
    bool ok = true;
    for (int v = 1; v <= t.n && ok; ++v) ok = count[v] == 1;
    if (ok && (!best.feasible || w < best.total_weight)) {
      best.feasible = true;
      best.total_weight = w;
      best.chosen_edges.clear();
      for (int e = 0; e < m; ++e)
        if (mask & (1u << e)) best.chosen_edges.push_back(extras[e]);
    }
  }
  return best;
}

CycleCompletionResult brute_unit_cycle_completion(const RootedTree& t) {
  if (t.n > 16)
    throw ResourceLimitError("unit cycle oracle is capped at n = 16");
  // Each chosen extra edge closes a tree path of >= 3 vertices into a cycle;
  // the cycles partition the vertices. Scan kept-tree-edge subsets.
  std::vector<std::pair<int, int>> tedges;
  for (int v = 1; v <= t.n; ++v)
    if (v != t.root) tedges.emplace_back(t.parent[v], v);
  int m = static_cast<int>(tedges.size());
  CycleCompletionResult best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> deg(t.n + 1, 0), comp(t.n + 1, -1);
    std::vector<std::vector<int>> adj(t.n + 1);
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) {
        auto [a, b] = tedges[e];
        ++deg[a];
        ++deg[b];
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    bool ok = true;
    long long comps = 0;
    for (int v = 1; v <= t.n && ok; ++v) {
      if (deg[v] > 2) ok = false;
      if (comp[v] >= 0) continue;
      std::vector<int> stack{v}, members;
      comp[v] = static_cast<int>(comps);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        members.push_back(u);
        for (int w : adj[u])
          if (comp[w] < 0) {
            comp[w] = static_cast<int>(comps);
            stack.push_back(w);
          }
      }
      if (members.size() < 3) ok = false;
      ++comps;
    }
    if (ok && (!best.feasible || comps < best.total_weight)) {
      best.feasible = true;
      best.total_weight = comps;
    }
  }
  return best;
}

ConnectedPartitionResult brute_connected_partition(
    const RootedTree& t, const ConnectedPartSpec& spec) {
  if (t.n > 12)
    throw ResourceLimitError("connected partition oracle is capped at n = 12");
  int n = t.n, k = spec.k;
  // All connected vertex subsets, grouped by size.
  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int first = __builtin_ctz(mask);
    unsigned seen = 1u << first;
    std::vector<int> stack{first + 1};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto touch = [&](int u) {
        unsigned b = 1u << (u - 1);
        if ((mask & b) && !(seen & b)) {
          seen |= b;
          stack.push_back(u);
        }
      };
      if (v != t.root) touch(t.parent[v]);
      for (int c : t.children[v]) touch(c);
    }
    if (seen == mask) by_size[__builtin_popcount(mask)].push_back(mask);
  }

  ConnectedPartitionResult best;
  best.min_cost = kInf;
  std::vector<unsigned> chosen(k + 1, 0);
  std::function<void(int, unsigned)> rec = [&](int p, unsigned used) {
    if (p > k) {
      long long cost = 0;
      std::vector<int> assign(n + 1, 0);
      for (int q = 1; q <= k; ++q)
        for (int v = 1; v <= n; ++v)
          if (chosen[q] & (1u << (v - 1))) assign[v] = q;
      for (int v = 1; v <= n; ++v) {
        if (assign[v] == 0) cost += spec.cv[v];
        if (v != t.root &&
            !(assign[v] > 0 && assign[v] == assign[t.parent[v]]))
          cost += spec.ce[v];
      }
      if (cost < best.min_cost) {
        best.feasible = true;
        best.min_cost = cost;
        best.assignment = assign;
      }
      return;
    }
    for (unsigned mask : by_size[spec.sz[p]]) {
      if (mask & used) continue;
      // Equal-size parts are interchangeable: force ascending masks.
      if (p > 1 && spec.sz[p] == spec.sz[p - 1] && mask < chosen[p - 1])
        continue;
      chosen[p] = mask;
      rec(p + 1, used | mask);
    }
  };
  rec(1, 0);
  if (!best.feasible) {
    best.min_cost = 0;
    best.assignment.assign(n + 1, 0);
  }
  return best;
}

int brute_grundy(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size()) - 1;
  if (n > 8) throw ResourceLimitError("Grundy oracle is capped at n = 8");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  int best = 0;
  do {
    std::vector<int> color(n + 1, 0);
    int high = 0;
    for (int v : order) {
      int c = 1;
      bool taken = true;
      while (taken) {
        taken = false;
        for (int u : adj[v])
          if (color[u] == c) {
            taken = true;
            ++c;
            break;
          }
      }
      color[v] = c;
      high = std::max(high, c);
    }
    best = std::max(best, high);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

long long brute_max_weight_matching(
    int n, const std::vector<std::tuple<int, int, long long>>& edges) {
  if (n > 12)
    throw ResourceLimitError("matching oracle is capped at n = 12");
  std::function<long long(unsigned)> rec = [&](unsigned used) -> long long {
    int v = 0;
    while (v < n && (used & (1u << v))) ++v;
    if (v == n) return 0;
    long long best = rec(used | (1u << v));  // leave v unmatched
    for (const auto& [a, b, w] : edges) {
      int x = a - 1, y = b - 1;
      if (x != v && y != v) continue;
      int other = x == v ? y : x;
      if (used & (1u << other)) continue;
      best = std::max(best,
                      w + rec(used | (1u << v) | (1u << other)));
    }
    return best;
  };
  return rec(0);
}

StreamPlan brute_min_streams(const BoundedDigraph& g) {
  if (g.n > 5)
    throw ResourceLimitError("stream oracle is capped at 5 vertices");
  for (int u = 1; u <= g.n; ++u)
    if (g.vertex[u].ubv > 2)
      throw ResourceLimitError("stream oracle needs all bounds <= 2");
  for (const auto& e : g.edges)
    if (e.ube > 2) throw ResourceLimitError("stream oracle needs bounds <= 2");

  // All simple source->destination paths, as edge-index lists plus the start
  // vertex (a path may be a single vertex and carry no edges).
  int m = static_cast<int>(g.edges.size());
  std::vector<std::vector<int>> out(g.n + 1);
  for (int e = 0; e < m; ++e) out[g.edges[e].u].push_back(e);
  std::vector<std::vector<int>> cand;
  std::vector<int> cand_start;
  std::vector<int> cur;
  std::vector<char> onpath(g.n + 1, 0);
  std::function<void(int, int)> dfs2 = [&](int s, int v) {
    if (g.vertex[v].is_dest) {
      cand.push_back(cur);
      cand_start.push_back(s);
    }
    for (int e : out[v]) {
      int w = g.edges[e].v;
      if (onpath[w]) continue;
      onpath[w] = 1;
      cur.push_back(e);
      dfs2(s, w);
      cur.pop_back();
      onpath[w] = 0;
    }
  };
  for (int s = 1; s <= g.n; ++s)
    if (g.vertex[s].is_source) {
      onpath[s] = 1;
      dfs2(s, s);
      onpath[s] = 0;
    }

  long long pmax = 0;
  for (int u = 1; u <= g.n; ++u) pmax += g.vertex[u].ubv;

  StreamPlan best;
  long long combos = 0;
  std::vector<int> pick;
  std::function<void(int, int)> choose = [&](int from, int left) {
    if (++combos > 20'000'000)
      throw ResourceLimitError("stream oracle combination budget exceeded");
    if (left == 0) {
      std::vector<long long> npe(m, 0), npv(g.n + 1, 0);
      long long cost = 0;
      for (int pi : pick) {
        for (int e : cand[pi]) ++npe[e];
        std::vector<char> seen(g.n + 1, 0);
        int v = cand_start[pi];
        if (!seen[v]) { ++npv[v]; seen[v] = 1; }
        for (int e : cand[pi]) {
          int w = g.edges[e].v;
          if (!seen[w]) { ++npv[w]; seen[w] = 1; }
        }
      }
      for (int e = 0; e < m; ++e) {
        if (npe[e] < g.edges[e].lbe || npe[e] > g.edges[e].ube) return;
        cost += (npe[e] - g.edges[e].lbe) * g.edges[e].ce;
      }
      for (int u = 1; u <= g.n; ++u) {
        if (npv[u] < g.vertex[u].lbv || npv[u] > g.vertex[u].ubv) return;
        cost += (npv[u] - g.vertex[u].lbv) * g.vertex[u].cv;
      }
      if (!best.feasible || cost < best.cost_s) {
        best.feasible = true;
        best.p = static_cast<long long>(pick.size());
        best.cost_s = cost;
        best.paths.clear();
        for (int pi : pick) {
          std::vector<int> vp{cand_start[pi]};
          for (int e : cand[pi]) vp.push_back(g.edges[e].v);
          best.paths.push_back(std::move(vp));
        }
      }
      return;
    }
    for (int i = from; i < static_cast<int>(cand.size()); ++i) {
      pick.push_back(i);
      choose(i, left - 1);
      pick.pop_back();
    }
  };
  for (long long p = 0; p <= pmax && !best.feasible; ++p)
    choose(0, static_cast<int>(p));
  return best;
}

DcmstResult brute_spanning_trees(const WeightedGraph& g, int r, int k) {
  if (g.n > 7 || g.edges.size() > 24)
    throw ResourceLimitError("spanning tree oracle is capped at n = 7");
  int m = static_cast<int>(g.edges.size());
  DcmstResult best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != g.n - 1) continue;
    std::vector<int> parent(g.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    long long w = 0;
    int joins = 0, deg = 0;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) {
        const auto& ed = g.edges[e];
        w += ed.w;
        if (ed.u == r || ed.v == r) ++deg;
        int a = find(ed.u), b = find(ed.v);
        if (a != b) {
          parent[a] = b;
          ++joins;
        }
      }
    if (joins != g.n - 1 || deg != k) continue;
    if (!best.feasible || w < best.total_weight) {
      best.feasible = true;
      best.total_weight = w;
      best.degree_r = deg;
      best.edge_indices.clear();
      for (int e = 0; e < m; ++e)
        if (mask & (1u << e)) best.edge_indices.push_back(e);
    }
  }
  return best;
}

void enumerate_labeled_trees(
    int n,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n > 9)
    throw ResourceLimitError("labeled enumeration is capped at n = 9");
  if (n < 1) throw InputError("tree size must be positive");
  if (n == 1) {
    fn({});
    return;
  }
  std::vector<int> pruefer(n - 2, 1);
  while (true) {
    // Decode: join the smallest remaining leaf to the next sequence entry.
    std::vector<int> deg(n + 1, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
      int leaf = 0;
      for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) { leaf = v; break; }
      edges.emplace_back(leaf, x);
      deg[leaf] = 0;
      --deg[x];
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) (a == 0 ? a : b) = v;
    edges.emplace_back(a, b);
    fn(edges);
    // Next sequence.
    int i = n - 3;
    while (i >= 0 && pruefer[i] == n) pruefer[i--] = 1;
    if (i < 0) break;
    ++pruefer[i];
  }
}

void enumerate_unlabeled_rooted(
    int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n > 14)
    throw ResourceLimitError("unlabeled enumeration is capped at n = 14");
  if (n < 1) throw InputError("tree size must be positive");
  auto emit = [&](const std::vector<int>& level) {
    std::vector<int> parent(n + 1, 0);
    std::vector<int> last(n + 2, 0);  // last vertex seen per level
    for (int i = 1; i <= n; ++i) {
      if (level[i] > 1) parent[i] = last[level[i] - 1];
      last[level[i]] = i;
    }
    fn(parent);
  };
  std::vector<int> level(n + 1);
  for (int i = 1; i <= n; ++i) level[i] = i;  // the path
  while (true) {
    emit(level);
    int p = 0;
    for (int i = n; i >= 1; --i)
      if (level[i] > 2) { p = i; break; }
    if (p == 0) break;
    int q = 0;
    for (int i = p - 1; i >= 1; --i)
      if (level[i] == level[p] - 1) { q = i; break; }
    for (int i = p; i <= n; ++i) level[i] = level[i - (p - q)];
  }
}

}  // namespace treeopt
