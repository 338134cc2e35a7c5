#include "treeopt/matching.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>

namespace treeopt {

namespace {

// -infinity is a flag, never an arithmetic value.
struct Val {
  long long v = 0;
  bool ok = false;
};

Val better(Val a, Val b) {
  if (!a.ok) return b;
  if (!b.ok) return a;
  return a.v >= b.v ? a : b;
}

Val plus(long long c, Val x) { return x.ok ? Val{c + x.v, true} : Val{}; }

}  // namespace

WeightedMatchingResult extended_tree_max_weight_matching(const RootedTree& t) {
  if (static_cast<int>(t.vertex_weight.size()) != t.n + 1)
    throw InputError("vertex weights are required");
  const auto& w = t.vertex_weight;

  // sons[i] sorted nondecreasing by (weight, id); ties by id keep the
  // traceback deterministic.
  std::vector<std::vector<int>> sons(t.n + 1);
  for (int i = 1; i <= t.n; ++i) {
    sons[i] = t.children[i];
    std::sort(sons[i].begin(), sons[i].end(), [&](int a, int b) {
      return std::make_pair(w[a], a) < std::make_pair(w[b], b);
    });
  }

  std::vector<long long> A(t.n + 1, 0), B(t.n + 1, 0);
  // ca[i]/cb[i] indexed by (j, k) with 1 <= j <= ns+1, j-1 <= k <= ns.
  std::vector<std::vector<Val>> ca(t.n + 1), cb(t.n + 1);
  auto at = [&](std::vector<Val>& tab, int ns, int j, int k) -> Val& {
    return tab[(j - 1) * (ns + 1) + (k - j + 1)];
  };

  for (int i : t.postorder()) {
    int ns = static_cast<int>(sons[i].size());
    if (ns == 0) continue;
    ca[i].assign(static_cast<size_t>(ns + 1) * (ns + 1), Val{});
    cb[i].assign(static_cast<size_t>(ns + 1) * (ns + 1), Val{});
    auto sj = [&](int j) { return sons[i][j - 1]; };
    auto diff = [&](int a, int b) { return std::llabs(w[a] - w[b]); };
    for (int j = 1; j <= ns; ++j) {
      at(ca[i], ns, j, j - 1) = Val{};  // -infinity sentinel
      at(ca[i], ns, j, j) = Val{diff(i, sj(j)) + B[sj(j)], true};
      at(cb[i], ns, j, j - 1) = Val{0, true};
      at(cb[i], ns, j, j) = Val{std::max(A[sj(j)], B[sj(j)]), true};
    }
    for (int count = 1; count <= ns - 1; ++count)
      for (int j = 1; j <= ns - count; ++j) {
        int k = j + count;
        Val a = Val{};
        a = better(a, plus(diff(sj(j), sj(k)) + B[sj(j)] + B[sj(k)],
                           at(ca[i], ns, j + 1, k - 1)));
        a = better(a, plus(diff(i, sj(j)) + B[sj(j)],
                           at(cb[i], ns, j + 1, k)));
        a = better(a, plus(diff(i, sj(k)) + B[sj(k)],
                           at(cb[i], ns, j, k - 1)));
        a = better(a, plus(std::max(A[sj(j)], B[sj(j)]),
                           at(ca[i], ns, j + 1, k)));
        a = better(a, plus(std::max(A[sj(k)], B[sj(k)]),
                           at(ca[i], ns, j, k - 1)));
        at(ca[i], ns, j, k) = a;
        Val b = Val{};
        b = better(b, plus(diff(sj(j), sj(k)) + B[sj(j)] + B[sj(k)],
                           at(cb[i], ns, j + 1, k - 1)));
        b = better(b, plus(std::max(A[sj(j)], B[sj(j)]),
                           at(cb[i], ns, j + 1, k)));
        b = better(b, plus(std::max(A[sj(k)], B[sj(k)]),
                           at(cb[i], ns, j, k - 1)));
        at(cb[i], ns, j, k) = b;
      }
    Val va = at(ca[i], ns, 1, ns);
    Val vb = at(cb[i], ns, 1, ns);
    if (!vb.ok) throw ContractError("CB sentinel leaked into outputs");
    A[i] = va.ok ? va.v : 0;  // A(i) unused downstream when ca is -infinity
    if (!va.ok && ns > 0) throw ContractError("CA(i,1,ns) must be defined");
    B[i] = vb.v;
  }

  WeightedMatchingResult res;
  res.weight = std::max(A[t.root], B[t.root]);

  // Traceback: re-derive the first case (in the recurrence's order) whose
  // value matches, then descend.
  std::function<void(int, bool)> walk_vertex;  // vertex, i matched here?
  std::function<void(int, int, int, bool)> walk;  // (i, j, k, mode A?)
  auto diff = [&](int a, int b) { return std::llabs(w[a] - w[b]); };
  walk = [&](int i, int j, int k, bool mode_a) {
    if (k < j) return;
    int ns = static_cast<int>(sons[i].size());
    auto sj = [&](int x) { return sons[i][x - 1]; };
    Val cur = mode_a ? at(ca[i], ns, j, k) : at(cb[i], ns, j, k);
    assert(cur.ok);
    if (j == k) {
      if (mode_a) {
        res.edges.emplace_back(i, sj(j));
        walk_vertex(sj(j), false);
      } else if (A[sj(j)] >= B[sj(j)] && cur.v == A[sj(j)]) {
        walk_vertex(sj(j), true);
      } else {
        walk_vertex(sj(j), false);
      }
      return;
    }
    auto match = [&](Val tail, long long add) {
      return tail.ok && tail.v + add == cur.v;
    };
    long long pair_jk = diff(sj(j), sj(k)) + B[sj(j)] + B[sj(k)];
    if (mode_a) {
      if (match(at(ca[i], ns, j + 1, k - 1), pair_jk)) {
        res.edges.emplace_back(sj(j), sj(k));
        walk_vertex(sj(j), false);
        walk_vertex(sj(k), false);
        walk(i, j + 1, k - 1, true);
      } else if (match(at(cb[i], ns, j + 1, k), diff(i, sj(j)) + B[sj(j)])) {
        res.edges.emplace_back(i, sj(j));
        walk_vertex(sj(j), false);
        walk(i, j + 1, k, false);
      } else if (match(at(cb[i], ns, j, k - 1), diff(i, sj(k)) + B[sj(k)])) {
        res.edges.emplace_back(i, sj(k));
        walk_vertex(sj(k), false);
        walk(i, j, k - 1, false);
      } else if (match(at(ca[i], ns, j + 1, k),
                       std::max(A[sj(j)], B[sj(j)]))) {
        walk_vertex(sj(j), A[sj(j)] >= B[sj(j)]);
        walk(i, j + 1, k, true);
      } else {
        assert(match(at(ca[i], ns, j, k - 1),
                     std::max(A[sj(k)], B[sj(k)])));
        walk_vertex(sj(k), A[sj(k)] >= B[sj(k)]);
        walk(i, j, k - 1, true);
      }
    } else {
      if (match(at(cb[i], ns, j + 1, k - 1), pair_jk)) {
        res.edges.emplace_back(sj(j), sj(k));
        walk_vertex(sj(j), false);
        walk_vertex(sj(k), false);
        walk(i, j + 1, k - 1, false);
      } else if (match(at(cb[i], ns, j + 1, k),
                       std::max(A[sj(j)], B[sj(j)]))) {
        walk_vertex(sj(j), A[sj(j)] >= B[sj(j)]);
        walk(i, j + 1, k, false);
      } else {
        assert(match(at(cb[i], ns, j, k - 1),
                     std::max(A[sj(k)], B[sj(k)])));
        walk_vertex(sj(k), A[sj(k)] >= B[sj(k)]);
        walk(i, j, k - 1, false);
      }
    }
  };
  walk_vertex = [&](int i, bool matched_here) {
    int ns = static_cast<int>(sons[i].size());
    if (ns == 0) return;
    walk(i, 1, ns, matched_here);
  };
  walk_vertex(t.root, A[t.root] >= B[t.root]);

  long long check = 0;
  for (auto [x, y] : res.edges) check += diff(x, y);
  if (check != res.weight)
    throw ContractError("traceback weight mismatch");
  return res;
}

PowerMatchingResult power_matching(const RootedTree& t, int k) {
  if (k < 2) throw InputError("power matching requires k >= 2");
  PowerMatchingResult res;
  res.matched.assign(t.n + 1, 0);
  for (int i : t.postorder()) {
    int last_son = 0;
    for (int s : t.children[i]) {
      if (res.matched[s]) continue;
      if (last_son == 0) {
        last_son = s;
      } else {
        res.edges.emplace_back(last_son, s);
        res.matched[last_son] = res.matched[s] = 1;
        last_son = 0;
      }
    }
    if (last_son > 0) {
      res.edges.emplace_back(i, last_son);
      res.matched[i] = res.matched[last_son] = 1;
    }
  }
  if (static_cast<int>(res.edges.size()) != t.n / 2)
    throw ContractError("power matching is not of size n/2");
  return res;
}

}  // namespace treeopt
