#include "treeopt/cycle_completion.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <memory>

namespace treeopt {

namespace {

bool is_tree_edge(const RootedTree& t, int u, int v) {
  return t.parent[u] == v || t.parent[v] == u;
}

void validate_extras(const RootedTree& t, const std::vector<ExtraEdge>& extras) {
  for (const auto& e : extras) {
    if (e.u < 1 || e.u > t.n || e.v < 1 || e.v > t.n)
      throw InputError("extra edge endpoint out of range");
    if (e.u == e.v) throw InputError("extra edge is a self-loop");
    if (is_tree_edge(t, e.u, e.v))
      throw InputError("extra edge duplicates a tree edge");
    if (e.w < 0) throw InputError("extra edge weight must be nonnegative");
  }
}

// Smaller (u,v) pair wins ties between equal-weight candidates.
std::pair<int, int> canon(const ExtraEdge& e) {
  return {std::min(e.u, e.v), std::max(e.u, e.v)};
}

struct DpState {
  std::vector<long long> wa_fin, wb_fin;  // finite parts
  std::vector<char> wa_inf;               // 1 when wA is infinite
  std::vector<int> wb_inf;                // number of sons with infinite wA
  std::vector<int> best;                  // argmin extra index for wA, -1 if none
};

// Shared traceback: walk from the root in "covered" mode, choosing the stored
// best edge at each uncovered subtree root.
CycleCompletionResult trace(const RootedTree& t, const LcaIndex& lca,
                            const std::vector<ExtraEdge>& extras,
                            const DpState& dp) {
  CycleCompletionResult res;
  if (dp.wa_inf[t.root]) return res;  // infeasible
  res.feasible = true;
  res.total_weight = dp.wa_fin[t.root];
  std::vector<char> onpath(t.n + 1, 0);
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    assert(!dp.wa_inf[i] && dp.best[i] >= 0);
    const ExtraEdge& e = extras[dp.best[i]];
    res.chosen_edges.push_back(e);
    std::vector<int> path;
    for (int x : {e.u, e.v}) {
      int v = x;
      while (v != i) {
        path.push_back(v);
        v = t.parent[v];
      }
    }
    path.push_back(i);
    for (int v : path) onpath[v] = 1;
    for (int v : path)
      for (int c : t.children[v])
        if (!onpath[c]) stack.push_back(c);
    for (int v : path) onpath[v] = 0;
  }
  (void)lca;
  return res;
}

}  // namespace

CycleCompletionResult greedy_unit_any_pair(const RootedTree& t) {
  // In the unit-weight any-pair model a valid edge set is exactly a
  // partition of the tree into vertex-disjoint paths of >= 3 vertices, one
  // added edge per path (its fundamental cycle).  Minimize the number of
  // paths by a bottom-up DP; the open path at vertex i plays the role of
  // l(i)/e(i), with its length saturated at 3.
  CycleCompletionResult res;
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  // dp[i][0]: all of T(i) covered; dp[i][s] (s=1..3): i ends an open path of
  // s (saturated) vertices, everything else in T(i) covered.
  std::vector<std::array<long long, 4>> dp(t.n + 1, {kInf, kInf, kInf, kInf});
  std::vector<std::array<int, 4>> endp(t.n + 1, {0, 0, 0, 0});
  std::vector<std::array<int, 4>> from(t.n + 1, {0, 0, 0, 0});
  std::vector<std::array<int, 4>> from_state(t.n + 1, {0, 0, 0, 0});
  struct ZeroMeta {
    bool join = false;  // false: close the s=3 open path with the edge (i, e)
    int a = 0, sa = 0, b = 0, sb = 0;
  };
  std::vector<ZeroMeta> zm(t.n + 1);

  for (int i : t.postorder()) {
    std::vector<int> bad;  // sons whose subtree cannot be fully closed
    long long closed = 0;  // Σ dp[c][0] over the other sons
    for (int c : t.children[i]) {
      if (dp[c][0] >= kInf) bad.push_back(c);
      else closed += dp[c][0];
    }
    if (bad.size() >= 3) continue;  // some son path can never be absorbed

    endp[i][1] = i;
    if (bad.empty()) dp[i][1] = closed + 1;
    // i extends the open path of son a; every other son must be closed.
    auto try_extend = [&](int s, int a) {
      if (!bad.empty() && !(bad.size() == 1 && bad[0] == a)) return;
      for (int cs = s - 1; cs <= (s == 3 ? 3 : s - 1); ++cs) {
        if (dp[a][cs] >= kInf) continue;
        long long v =
            dp[a][cs] + closed - (dp[a][0] < kInf ? dp[a][0] : 0);
        if (v < dp[i][s]) {
          dp[i][s] = v;
          from[i][s] = a;
          from_state[i][s] = cs;
          endp[i][s] = endp[a][cs];
        }
      }
    };
    for (int a : t.children[i])
      for (int s : {2, 3}) try_extend(s, a);
    // Join two open son paths through i (combined length >= 3 always).
    auto open_best = [&](int c) {
      int best = 0;
      for (int s = 1; s <= 3; ++s)
        if (dp[c][s] < kInf && (best == 0 || dp[c][s] < dp[c][best])) best = s;
      return best;
    };
    auto try_join = [&](int a, int b) {
      int sa = open_best(a), sb = open_best(b);
      if (sa == 0 || sb == 0) return;
      long long v = dp[a][sa] + dp[b][sb] - 1 + closed;
      if (dp[a][0] < kInf) v -= dp[a][0];
      if (dp[b][0] < kInf) v -= dp[b][0];
      if (v < dp[i][0]) {
        dp[i][0] = v;
        zm[i] = {true, a, sa, b, sb};
      }
    };
    if (bad.size() == 2) {
      try_join(bad[0], bad[1]);
    } else if (bad.size() == 1) {
      for (int b : t.children[i])
        if (b != bad[0]) try_join(bad[0], b);
    } else {
      for (size_t x = 0; x < t.children[i].size(); ++x)
        for (size_t y = x + 1; y < t.children[i].size(); ++y)
          try_join(t.children[i][x], t.children[i][y]);
    }
    // Close the open path ending at i with the edge (i, e(i)).
    if (dp[i][3] < dp[i][0]) {
      dp[i][0] = dp[i][3];
      zm[i] = {};
    }
  }

  if (dp[t.root][0] >= kInf) return res;
  res.feasible = true;
  res.total_weight = dp[t.root][0];
  std::vector<std::pair<int, int>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto [i, s] = stack.back();
    stack.pop_back();
    if (s == 0) {
      const ZeroMeta& m = zm[i];
      if (m.join) {
        res.chosen_edges.push_back({endp[m.a][m.sa], endp[m.b][m.sb], 1});
        for (int c : t.children[i])
          if (c != m.a && c != m.b) stack.push_back({c, 0});
        stack.push_back({m.a, m.sa});
        stack.push_back({m.b, m.sb});
      } else {
        res.chosen_edges.push_back({i, endp[i][3], 1});
        stack.push_back({i, 3});
        continue;
      }
    } else if (s == 1) {
      for (int c : t.children[i]) stack.push_back({c, 0});
    } else {
      int a = from[i][s];
      stack.push_back({a, from_state[i][s]});
      for (int c : t.children[i])
        if (c != a) stack.push_back({c, 0});
    }
  }
  return res;
}

CycleCompletionResult solve_quadratic(const RootedTree& t,
                                      const std::vector<ExtraEdge>& extras) {
  validate_extras(t, extras);
  LcaIndex lca(t);
  std::vector<std::vector<int>> ledge(t.n + 1);
  for (size_t e = 0; e < extras.size(); ++e)
    ledge[lca.lca(extras[e].u, extras[e].v)].push_back(static_cast<int>(e));

  DpState dp;
  dp.wa_fin.assign(t.n + 1, 0);
  dp.wb_fin.assign(t.n + 1, 0);
  dp.wa_inf.assign(t.n + 1, 1);
  dp.wb_inf.assign(t.n + 1, 0);
  dp.best.assign(t.n + 1, -1);

  // Scratch holding wAsum(i, .) while vertex i is being processed.
  std::vector<long long> sum_fin(t.n + 1, 0);
  std::vector<int> sum_inf(t.n + 1, 0);

  for (int i : t.postorder()) {
    for (int c : t.children[i]) {
      dp.wb_fin[i] += dp.wa_fin[c];
      dp.wb_inf[i] += dp.wa_inf[c];
    }
    if (ledge[i].empty()) continue;
    // wAsum over T(i) by a preorder walk from i.
    sum_fin[i] = dp.wb_fin[i];
    sum_inf[i] = dp.wb_inf[i];
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v != i) {
        sum_fin[v] = sum_fin[t.parent[v]] - dp.wa_fin[v] + dp.wb_fin[v];
        sum_inf[v] = sum_inf[t.parent[v]] - dp.wa_inf[v] + dp.wb_inf[v];
      }
      for (int c : t.children[v]) stack.push_back(c);
    }
    for (int e : ledge[i]) {
      const ExtraEdge& x = extras[e];
      long long cand;
      if (x.u == i || x.v == i) {
        int j = (x.u == i) ? x.v : x.u;
        if (sum_inf[j] != 0) continue;
        cand = sum_fin[j] + x.w;
      } else {
        if (sum_inf[x.u] + sum_inf[x.v] - dp.wb_inf[i] != 0) continue;
        cand = sum_fin[x.u] + sum_fin[x.v] - dp.wb_fin[i] + x.w;
      }
      if (dp.wa_inf[i] || cand < dp.wa_fin[i] ||
          (cand == dp.wa_fin[i] && canon(x) < canon(extras[dp.best[i]]))) {
        dp.wa_inf[i] = 0;
        dp.wa_fin[i] = cand;
        dp.best[i] = e;
      }
    }
  }
  return trace(t, lca, extras, dp);
}

CycleCompletionResult solve_fast(const RootedTree& t,
                                 const std::vector<ExtraEdge>& extras) {
  validate_extras(t, extras);
  LcaIndex lca(t);
  DfsNumbering dfs = dfs_numbering(t);
  std::vector<std::vector<int>> ledge(t.n + 1);
  for (size_t e = 0; e < extras.size(); ++e)
    ledge[lca.lca(extras[e].u, extras[e].v)].push_back(static_cast<int>(e));

  DpState dp;
  dp.wa_fin.assign(t.n + 1, 0);
  dp.wb_fin.assign(t.n + 1, 0);
  dp.wa_inf.assign(t.n + 1, 1);
  dp.wb_inf.assign(t.n + 1, 0);
  dp.best.assign(t.n + 1, -1);

  AddSegTree fin(t.n);   // finite part of wAsum
  AddSegTree inf(t.n);   // number of infinite terms in wAsum

  for (int i : t.postorder()) {
    for (int c : t.children[i]) {
      dp.wb_fin[i] += dp.wa_fin[c];
      dp.wb_inf[i] += dp.wa_inf[c];
    }
    // Leaf DFSnum(i) takes wB(i); each son subtree shifts by wB(i) - wA(son).
    fin.point_set(dfs.num[i], dp.wb_fin[i]);
    inf.point_set(dfs.num[i], dp.wb_inf[i]);
    for (int c : t.children[i]) {
      fin.range_add(dfs.num[c], dfs.max_num[c], dp.wb_fin[i] - dp.wa_fin[c]);
      inf.range_add(dfs.num[c], dfs.max_num[c], dp.wb_inf[i] - dp.wa_inf[c]);
    }
    for (int e : ledge[i]) {
      const ExtraEdge& x = extras[e];
      long long cand;
      if (x.u == i || x.v == i) {
        int j = (x.u == i) ? x.v : x.u;
        if (inf.point_query(dfs.num[j]) != 0) continue;
        cand = fin.point_query(dfs.num[j]) + x.w;
      } else {
        long long bad = inf.point_query(dfs.num[x.u]) +
                        inf.point_query(dfs.num[x.v]) - dp.wb_inf[i];
        if (bad != 0) continue;
        cand = fin.point_query(dfs.num[x.u]) + fin.point_query(dfs.num[x.v]) -
               dp.wb_fin[i] + x.w;
      }
      if (dp.wa_inf[i] || cand < dp.wa_fin[i] ||
          (cand == dp.wa_fin[i] && canon(x) < canon(extras[dp.best[i]]))) {
        dp.wa_inf[i] = 0;
        dp.wa_fin[i] = cand;
        dp.best[i] = e;
      }
    }
  }
  return trace(t, lca, extras, dp);
}

MinimaxResult solve_minimax(const RootedTree& t,
                            const std::vector<ExtraEdge>& extras) {
  validate_extras(t, extras);
  MinimaxResult res;
  std::vector<long long> weights;
  weights.reserve(extras.size());
  for (const auto& e : extras) weights.push_back(e.w);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (weights.empty()) return res;

  auto attempt = [&](long long wcap) {
    std::vector<ExtraEdge> kept;
    for (const auto& e : extras)
      if (e.w <= wcap) kept.push_back(e);
    return solve_fast(t, kept);
  };

  CycleCompletionResult full = attempt(weights.back());
  if (!full.feasible) return res;
  size_t lo = 0, hi = weights.size() - 1;
  CycleCompletionResult witness = std::move(full);
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    CycleCompletionResult r = attempt(weights[mid]);
    if (r.feasible) {
      witness = std::move(r);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  res.feasible = true;
  res.w_max = weights[lo];
  res.chosen_edges = std::move(witness.chosen_edges);
  return res;
}

bool covers_exactly_once(const RootedTree& t,
                         const std::vector<ExtraEdge>& chosen) {
  std::vector<int> depth = t.depths();
  std::vector<int> count(t.n + 1, 0);
  for (const auto& e : chosen) {
    if (e.u < 1 || e.u > t.n || e.v < 1 || e.v > t.n || e.u == e.v) return false;
    if (is_tree_edge(t, e.u, e.v)) return false;
    int a = e.u, b = e.v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      ++count[a];
      a = t.parent[a];
    }
    ++count[a];
  }
  for (int v = 1; v <= t.n; ++v)
    if (count[v] != 1) return false;
  return true;
}

}  // namespace treeopt
