#include "treeopt/coloring.hpp"

#include <algorithm>
#include <cassert>

namespace treeopt {

std::vector<int> first_fit_color(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& order) {
  int n = static_cast<int>(adj.size()) - 1;
  if (static_cast<int>(order.size()) != n)
    throw InputError("order must list every vertex exactly once");
  std::vector<char> seen(n + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[v])
      throw InputError("order is not a permutation");
    seen[v] = 1;
  }
  std::vector<int> color(n + 1, 0);
  std::vector<char> used(n + 2, 0);
  for (int v : order) {
    for (int u : adj[v])
      if (color[u] > 0 && color[u] <= n + 1) used[color[u]] = 1;
    int c = 1;
    while (used[c]) ++c;
    color[v] = c;
    for (int u : adj[v])
      if (color[u] > 0 && color[u] <= n + 1) used[color[u]] = 0;
  }
  return color;
}

namespace {

// first-fit fold over a color histogram: start at 1, each value >= the
// running color bumps it by one; values taken in nondecreasing order.
int fold(const std::vector<int>& cnt, int kmax) {
  int c = 1;
  for (int v = 1; v <= kmax; ++v) {
    if (cnt[v] == 0 || v < c) continue;
    c += std::min(cnt[v], v - c + 1);
  }
  return c;
}

}  // namespace

GrundyResult grundy_all(const RootedTree& t) {
  GrundyResult res;
  res.c1.assign(t.n + 1, 0);
  res.cmax.assign(t.n + 1, 0);
  res.colmax.assign(t.n + 1, 0);

  int kmax = 1;
  while ((1 << kmax) <= t.n) ++kmax;  // floor(log2 n) + 1

  std::vector<int> post = t.postorder();
  for (int i : post) {
    std::vector<int> vals;
    vals.reserve(t.children[i].size());
    for (int s : t.children[i]) vals.push_back(res.c1[s]);
    std::sort(vals.begin(), vals.end());
    int c = 1;
    for (int v : vals)
      if (v >= c) ++c;
    res.c1[i] = c;
  }

  // up[i] = colmax(parent(i), i): the color of parent(i) with T(i) removed
  // and parent(i) as root; cmax(i) folds the sons' c1 values plus up[i].
  std::vector<int> up(t.n + 1, 0);
  std::vector<int> cnt(kmax + 2, 0);
  for (int i : t.preorder()) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int s : t.children[i]) ++cnt[res.c1[s]];
    if (i != t.root) ++cnt[up[i]];
    res.cmax[i] = fold(cnt, kmax + 1);
    for (int s : t.children[i]) {
      --cnt[res.c1[s]];
      up[s] = fold(cnt, kmax + 1);
      ++cnt[res.c1[s]];
    }
  }

  for (int i = 1; i <= t.n; ++i) {
    if (i != t.root) res.colmax[i] = up[i];
    res.grundy = std::max(res.grundy, res.cmax[i]);
    if (res.c1[i] < 1 || res.c1[i] > res.cmax[i] || res.cmax[i] > kmax)
      throw ContractError("Grundy bound 1 <= c1 <= cmax <= log2(n)+1 broken");
  }
  return res;
}

}  // namespace treeopt
