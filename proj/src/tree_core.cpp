#include "treeopt/tree_core.hpp"

#include <algorithm>
#include <cassert>

namespace treeopt {

std::vector<int> RootedTree::preorder() const {
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it)
      stack.push_back(*it);
  }
  return order;
}

std::vector<int> RootedTree::postorder() const {
  std::vector<int> order;
  order.reserve(n);
  // stack of (vertex, next child index)
  std::vector<std::pair<int, size_t>> stack;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < children[v].size()) {
      int c = children[v][idx++];
      stack.emplace_back(c, 0);
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  return order;
}

std::vector<int> RootedTree::depths() const {
  std::vector<int> depth(n + 1, 0);
  for (int v : preorder())
    if (v != root) depth[v] = depth[parent[v]] + 1;
  return depth;
}

RootedTree root_at(int n, const std::vector<TreeEdge>& edges, int r,
                   bool weighted) {
  if (n < 1) throw InputError("tree must have at least one vertex");
  if (r < 1 || r > n) throw InputError("root out of range");
  if (static_cast<int>(edges.size()) != n - 1)
    throw InputError("a tree on " + std::to_string(n) + " vertices needs " +
                     std::to_string(n - 1) + " edges, got " +
                     std::to_string(edges.size()));
  std::vector<std::vector<std::pair<int, long long>>> adj(n + 1);
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop in tree edges");
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  RootedTree t;
  t.n = n;
  t.root = r;
  t.parent.assign(n + 1, 0);
  t.children.assign(n + 1, {});
  if (weighted) t.edge_weight.assign(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{r};
  seen[r] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (auto [u, w] : adj[v]) {
      if (seen[u]) {
        if (u != t.parent[v]) throw InputError("edge set contains a cycle");
        continue;
      }
      seen[u] = true;
      t.parent[u] = v;
      t.children[v].push_back(u);
      if (weighted) t.edge_weight[u] = w;
      stack.push_back(u);
    }
  }
  if (visited != n) throw InputError("edge set is disconnected");
  // BFS/DFS via stack reverses sibling order; restore input order.
  for (int v = 1; v <= n; ++v) t.children[v].clear();
  for (const auto& e : edges) {
    int child = (t.parent[e.v] == e.u) ? e.v : e.u;
    t.children[t.parent[child]].push_back(child);
  }
  return t;
}

RootedTree from_parents(int n, const std::vector<int>& parent, int root) {
  if (n < 1) throw InputError("tree must have at least one vertex");
  if (static_cast<int>(parent.size()) != n + 1)
    throw InputError("parent array must have size n+1");
  RootedTree t;
  t.n = n;
  t.root = root;
  t.parent = parent;
  t.children.assign(n + 1, {});
  for (int v = 1; v <= n; ++v) {
    if (v == root) {
      if (parent[v] != 0) throw InputError("root must have parent 0");
      continue;
    }
    if (parent[v] < 1 || parent[v] > n) throw InputError("bad parent link");
    t.children[parent[v]].push_back(v);
  }
  // Validate reachability.
  if (static_cast<int>(t.preorder().size()) != n)
    throw InputError("parent array does not describe a tree");
  return t;
}

DfsNumbering dfs_numbering(const RootedTree& tree) {
  DfsNumbering d;
  d.num.assign(tree.n + 1, 0);
  d.max_num.assign(tree.n + 1, 0);
  int counter = 0;
  for (int v : tree.preorder()) d.num[v] = ++counter;
  for (int v : tree.postorder()) {
    d.max_num[v] = d.num[v];
    for (int c : tree.children[v]) d.max_num[v] = std::max(d.max_num[v], d.max_num[c]);
  }
  return d;
}

LcaIndex::LcaIndex(const RootedTree& tree) : n_(tree.n) {
  depth_.assign(n_ + 1, 0);
  first_.assign(n_ + 1, -1);
  tour_.reserve(2 * n_);
  // Euler tour: record vertex on entry and after each child returns.
  std::vector<std::pair<int, size_t>> stack;
  stack.emplace_back(tree.root, 0);
  tour_.push_back(tree.root);
  first_[tree.root] = 0;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < tree.children[v].size()) {
      int c = tree.children[v][idx++];
      depth_[c] = depth_[v] + 1;
      first_[c] = static_cast<int>(tour_.size());
      tour_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) tour_.push_back(stack.back().first);
    }
  }
  int m = static_cast<int>(tour_.size());
  int levels = 1;
  while ((1 << levels) <= m) ++levels;
  sp_.assign(levels, std::vector<int>(m));
  for (int i = 0; i < m; ++i) sp_[0][i] = i;
  for (int k = 1; k < levels; ++k)
    for (int i = 0; i + (1 << k) <= m; ++i)
      sp_[k][i] = shallower(sp_[k - 1][i], sp_[k - 1][i + (1 << (k - 1))]);
}

int LcaIndex::lca(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw InputError("lca: vertex out of range");
  int a = first_[u], b = first_[v];
  if (a > b) std::swap(a, b);
  int len = b - a + 1;
  int k = 0;
  while ((2 << k) <= len) ++k;
  return tour_[shallower(sp_[k][a], sp_[k][b - (1 << k) + 1])];
}

AddSegTree::AddSegTree(int n) : n_(n) {
  if (n < 1) throw InputError("AddSegTree needs at least one leaf");
  uagg_.assign(4 * static_cast<size_t>(n), 0);
  base_.assign(n + 1, 0);
}

void AddSegTree::range_add(int l, int r, long long delta) {
  if (l < 1 || r > n_ || l > r)
    throw InputError("range_add: bad interval");
  // Iterative recursion over (node, lo, hi).
  struct Frame { int node, lo, hi; };
  std::vector<Frame> stack{{1, 1, n_}};
  while (!stack.empty()) {
    auto [node, lo, hi] = stack.back();
    stack.pop_back();
    if (r < lo || hi < l) continue;
    if (l <= lo && hi <= r) {
      uagg_[node] += delta;
      continue;
    }
    int mid = (lo + hi) / 2;
    stack.push_back({2 * node, lo, mid});
    stack.push_back({2 * node + 1, mid + 1, hi});
  }
}

long long AddSegTree::point_query(int i) const {
  if (i < 1 || i > n_) throw InputError("point_query: leaf out of range");
  long long sum = base_[i];
  int node = 1, lo = 1, hi = n_;
  while (true) {
    sum += uagg_[node];
    if (lo == hi) break;
    int mid = (lo + hi) / 2;
    if (i <= mid) {
      node = 2 * node;
      hi = mid;
    } else {
      node = 2 * node + 1;
      lo = mid + 1;
    }
  }
  return sum;
}

void AddSegTree::point_set(int i, long long value) {
  long long cur = point_query(i);
  base_[i] += value - cur;
}

ActiveLeafTrees::ActiveLeafTrees(int n) : n_(n) {
  if (n < 1) throw InputError("ActiveLeafTrees needs at least one leaf");
  sza_ = 1;
  while (sza_ < n) sza_ <<= 1;
  szb_ = 1;
  while (szb_ < std::max(1, n - 1)) szb_ <<= 1;
  nactive_.assign(2 * sza_, 0);
  active_.assign(n + 1, true);
  for (int i = 0; i < n; ++i) nactive_[sza_ + i] = 1;
  for (int q = sza_ - 1; q >= 1; --q)
    nactive_[q] = nactive_[2 * q] + nactive_[2 * q + 1];
  hc_.assign(2 * szb_, kInf);
  lnum_.assign(2 * szb_, 0);
  for (int i = 0; i < szb_; ++i) lnum_[szb_ + i] = i + 1;
  for (int q = szb_ - 1; q >= 1; --q) pull_b(q);
}

bool ActiveLeafTrees::active(int i) const {
  if (i < 1 || i > n_) throw InputError("leaf out of range");
  return active_[i];
}

long long ActiveLeafTrees::nactive_root() const { return nactive_[1]; }

int ActiveLeafTrees::rank(int i) const {
  if (!active(i)) throw InputError("rank: leaf is not active");
  int node = sza_ + i - 1;
  long long before = 0;
  while (node > 1) {
    if (node & 1) before += nactive_[node - 1];
    node >>= 1;
  }
  return static_cast<int>(before);
}

int ActiveLeafTrees::unrank(long long r) const {
  if (r < 0 || r >= nactive_[1]) throw InputError("unrank: rank out of range");
  int node = 1;
  while (node < sza_) {
    if (nactive_[2 * node] <= r) {
      r -= nactive_[2 * node];
      node = 2 * node + 1;
    } else {
      node = 2 * node;
    }
  }
  return node - sza_ + 1;
}

int ActiveLeafTrees::next_active(int i) const {
  long long r = rank(i);
  if (r + 1 >= nactive_[1]) return 0;
  return unrank(r + 1);
}

void ActiveLeafTrees::deactivate(int i) {
  if (!active(i)) throw InputError("deactivate: leaf already inactive");
  active_[i] = false;
  for (int node = sza_ + i - 1; node >= 1; node >>= 1) nactive_[node] -= 1;
}

void ActiveLeafTrees::pull_b(int q) {
  // Ties prefer the left child.
  if (hc_[2 * q] <= hc_[2 * q + 1]) {
    hc_[q] = hc_[2 * q];
    lnum_[q] = lnum_[2 * q];
  } else {
    hc_[q] = hc_[2 * q + 1];
    lnum_[q] = lnum_[2 * q + 1];
  }
}

void ActiveLeafTrees::set_hc(int i, long long v) {
  if (i < 1 || i > n_ - 1) throw InputError("set_hc: leaf out of range");
  int node = szb_ + i - 1;
  hc_[node] = v;
  for (node >>= 1; node >= 1; node >>= 1) pull_b(node);
}

long long ActiveLeafTrees::hc(int i) const {
  if (i < 1 || i > n_ - 1) throw InputError("hc: leaf out of range");
  return hc_[szb_ + i - 1];
}

std::pair<long long, int> ActiveLeafTrees::min_hc() const {
  if (n_ < 2) return {kInf, 0};
  return {hc_[1], lnum_[1]};
}

}  // namespace treeopt
