#include "treeopt/treebuild.hpp"

#include <algorithm>
#include <cassert>

namespace treeopt {

namespace {

void validate_seq(const LeafSeq& seq) {
  if (seq.h.empty()) throw InputError("leaf sequence must be nonempty");
  for (long long x : seq.h)
    if (x < 0) throw InputError("leaf heights must be nonnegative");
}

BuiltTree fresh(const LeafSeq& seq) {
  int n = static_cast<int>(seq.h.size());
  BuiltTree t;
  t.n_leaves = n;
  t.left.assign(2 * n, 0);
  t.right.assign(2 * n, 0);
  t.height.assign(2 * n, 0);
  for (int i = 1; i <= n; ++i) t.height[i] = seq.h[i - 1];
  return t;
}

}  // namespace

long long hmin_dp(const LeafSeq& seq) {
  validate_seq(seq);
  int n = static_cast<int>(seq.h.size());
  std::vector<std::vector<long long>> hmin(n + 1,
                                           std::vector<long long>(n + 1, 0));
  for (int i = 1; i <= n; ++i) hmin[i][i] = seq.h[i - 1];
  for (int len = 2; len <= n; ++len)
    for (int i = 1; i + len - 1 <= n; ++i) {
      int j = i + len - 1;
      long long best = -1;
      for (int k = i; k <= j - 1; ++k) {
        long long v = 1 + std::max(hmin[i][k], hmin[k + 1][j]);
        if (best < 0 || v < best) best = v;
      }
      hmin[i][j] = best;
    }
  return hmin[1][n];
}

BuiltTree build_linear(const LeafSeq& seq) {
  validate_seq(seq);
  BuiltTree t = fresh(seq);
  int n = t.n_leaves;
  int next_node = n + 1;

  // Rightmost path from root to the rightmost leaf, as a stack.
  std::vector<int> path{1};
  t.stack_pushes = 1;
  t.root = 1;
  for (int leaf = 2; leaf <= n; ++leaf) {
    long long hnew = t.height[leaf];
    while (path.size() >= 2 &&
           t.height[path[path.size() - 2]] <
               2 + std::max(t.height[path.back()], hnew)) {
      path.pop_back();
      ++t.stack_pops;
    }
    int vnew = next_node++;
    t.left[vnew] = path.back();
    t.right[vnew] = leaf;
    t.height[vnew] = 1 + std::max(t.height[path.back()], hnew);
    if (path.size() == 1) t.root = vnew;
    else t.right[path[path.size() - 2]] = vnew;
    path.back() = vnew;  // merge replaces the top in place
    path.push_back(leaf);
    ++t.stack_pushes;
  }
  if (t.stack_pushes + t.stack_pops > 2LL * n)
    throw ContractError("stack discipline broken in build_linear");
  return t;
}

BuiltTree build_mergesim(const LeafSeq& seq) {
  validate_seq(seq);
  BuiltTree t = fresh(seq);
  int n = t.n_leaves;
  t.root = 1;
  if (n == 1) return t;

  constexpr long long kInf = ActiveLeafTrees::kInf;
  ActiveLeafTrees alt(n);
  std::vector<long long> h(n + 1);
  std::vector<int> subroot(n + 1);
  for (int i = 1; i <= n; ++i) {
    h[i] = seq.h[i - 1];
    subroot[i] = i;
  }
  for (int i = 1; i <= n - 1; ++i)
    alt.set_hc(i, 1 + std::max(h[i], h[i + 1]));

  int next_node = n + 1;
  for (int step = 1; step <= n - 1; ++step) {
    auto [hc, i] = alt.min_hc();
    assert(hc < kInf);
    int j = alt.next_active(i);
    assert(j > 0);
    int vnew = next_node++;
    t.left[vnew] = subroot[i];
    t.right[vnew] = subroot[j];
    t.height[vnew] = hc;
    subroot[i] = vnew;
    alt.deactivate(j);
    h[i] = hc;
    h[j] = kInf;
    if (j <= n - 1) alt.set_hc(j, kInf);
    int jp = alt.next_active(i);
    if (jp == 0) {
      if (i <= n - 1) alt.set_hc(i, kInf);
    } else {
      alt.set_hc(i, 1 + std::max(h[i], h[jp]));
    }
    t.root = vnew;
  }
  return t;
}

bool validate_built_tree(const LeafSeq& seq, const BuiltTree& t) {
  int n = static_cast<int>(seq.h.size());
  if (t.n_leaves != n) return false;
  if (n == 1)
    return t.root == 1 && t.height.size() >= 2 && t.height[1] == seq.h[0];
  if (t.root < 1 || t.root >= 2 * n) return false;
  // Iterative inorder; checks strictness and the height recurrence.
  std::vector<int> leaves_seen;
  std::vector<std::pair<int, int>> stack{{t.root, 0}};  // (node, phase)
  int visits = 0;
  while (!stack.empty()) {
    auto [v, phase] = stack.back();
    stack.pop_back();
    if (++visits > 4 * n) return false;  // cycle guard
    bool is_leaf = v <= n;
    if (is_leaf) {
      if (t.left[v] != 0 || t.right[v] != 0) return false;
      if (t.height[v] != seq.h[v - 1]) return false;
      leaves_seen.push_back(v);
      continue;
    }
    if (t.left[v] == 0 || t.right[v] == 0) return false;
    if (phase == 0) {
      if (t.height[v] !=
          1 + std::max(t.height[t.left[v]], t.height[t.right[v]]))
        return false;
      stack.push_back({v, 1});
      stack.push_back({t.left[v], 0});
    } else {
      stack.push_back({t.right[v], 0});
    }
  }
  if (static_cast<int>(leaves_seen.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (leaves_seen[i] != i + 1) return false;
  return true;
}

}  // namespace treeopt
