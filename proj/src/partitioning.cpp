#include "treeopt/partitioning.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>

namespace treeopt {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Assigns part_number to every not-yet-assigned vertex in T(v).
void assign_part(const RootedTree& t, std::vector<int>& part, int v,
                 int part_number) {
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (part[u] != 0) continue;
    part[u] = part_number;
    for (int c : t.children[u]) stack.push_back(c);
  }
}

}  // namespace

Partition partition_bounded(const RootedTree& t, long long q) {
  if (q < 1) throw InputError("Q must be at least 1");
  Partition res;
  res.part.assign(t.n + 1, 0);
  res.representative.assign(1, 0);
  if (t.n < q) return res;  // infeasible
  res.feasible = true;

  std::vector<long long> w(t.n + 1, 0);
  for (int i : t.postorder()) {
    if (!t.is_leaf(i)) {
      long long ws = 0;
      size_t last_son = 0;  // index into children, 0 = never reset
      const auto& sons = t.children[i];
      for (size_t j = 0; j < sons.size(); ++j) {
        ws += w[sons[j]];
        if (ws >= q) {
          ++res.part_count;
          res.representative.push_back(i);
          for (size_t x = last_son; x <= j; ++x)
            assign_part(t, res.part, sons[x], res.part_count);
          last_son = j + 1;
          ws = 0;
        }
      }
      w[i] = ws + 1;
    } else {
      w[i] = 1;
    }
    if (w[i] >= q) {
      ++res.part_count;
      res.representative.push_back(i);
      assign_part(t, res.part, i, res.part_count);
      w[i] = 0;
    }
  }

  // Attach the leftover component C(r) to an adjacent part.
  if (w[t.root] > 0) {
    assert(res.part_count > 0);
    int target = 0;
    for (int v = 1; v <= t.n && target == 0; ++v) {
      if (v == t.root) continue;
      int p = t.parent[v];
      if (res.part[v] == 0 && res.part[p] > 0) target = res.part[p];
      else if (res.part[p] == 0 && res.part[v] > 0) target = res.part[v];
    }
    assert(target > 0);
    for (int v = 1; v <= t.n; ++v)
      if (res.part[v] == 0) res.part[v] = target;
  }
  return res;
}

bool validate_partition(const RootedTree& t, const Partition& p, long long q) {
  if (!p.feasible) return t.n < q;
  if (p.part_count < 1) return false;
  std::vector<long long> size(p.part_count + 1, 0);
  for (int v = 1; v <= t.n; ++v) {
    if (p.part[v] < 1 || p.part[v] > p.part_count) return false;
    ++size[p.part[v]];
  }
  long long upper = std::max<long long>(3 * q - 3, q);
  for (int x = 1; x <= p.part_count; ++x)
    if (size[x] < q || size[x] > upper) return false;
  // Connectivity of part + representative: count tree edges inside each set.
  for (int x = 1; x <= p.part_count; ++x) {
    int rep = p.representative[x];
    std::vector<char> in(t.n + 1, 0);
    long long members = 0;
    for (int v = 1; v <= t.n; ++v)
      if (p.part[v] == x) { in[v] = 1; ++members; }
    if (!in[rep]) { in[rep] = 1; ++members; }
    long long internal_edges = 0;
    for (int v = 1; v <= t.n; ++v)
      if (v != t.root && in[v] && in[t.parent[v]]) ++internal_edges;
    if (internal_edges != members - 1) return false;  // forest, not a subtree
  }
  return true;
}

ConnectedPartitionResult partition_connected(const RootedTree& t,
                                             const ConnectedPartSpec& spec) {
  const int k = spec.k;
  if (k < 1) throw InputError("part count must be at least 1");
  if (k > kMaxConnectedParts)
    throw ResourceLimitError("part count exceeds the hard cap of " +
                             std::to_string(kMaxConnectedParts));
  if (static_cast<int>(spec.sz.size()) != k + 1)
    throw InputError("sz must list exactly k sizes");
  long long total = 0;
  for (int p = 1; p <= k; ++p) {
    if (spec.sz[p] < 1) throw InputError("part sizes must be positive");
    if (p > 1 && spec.sz[p] < spec.sz[p - 1])
      throw InputError("part sizes must be nondecreasing");
    total += spec.sz[p];
  }
  if (total > t.n) throw InputError("part sizes exceed the vertex count");
  if (static_cast<int>(spec.cv.size()) != t.n + 1 ||
      static_cast<int>(spec.ce.size()) != t.n + 1)
    throw InputError("cost vectors must have size n+1");

  const int full = (1 << k) - 1;
  const int stride = t.n + 1;
  auto idx = [stride](int s, int j) { return s * stride + j; };

  std::vector<int> szsub(t.n + 1, 1);
  std::vector<int> post = t.postorder();
  for (int v : post)
    for (int c : t.children[v]) szsub[v] += szsub[c];

  // stages[v][x] = table after merging the first x sons of v;
  // final_tab[v] = table after the part-closing step. Kept for traceback.
  std::vector<std::vector<std::vector<long long>>> stages(t.n + 1);
  std::vector<std::vector<long long>> final_tab(t.n + 1);

  for (int i : post) {
    std::vector<long long> cur((full + 1) * stride, kInf);
    cur[idx(0, 1)] = 0;
    cur[idx(0, 0)] = spec.cv[i];
    stages[i].push_back(cur);
    int accum = 1;
    for (int son : t.children[i]) {
      const std::vector<long long>& sonf = final_tab[son];
      std::vector<long long> next((full + 1) * stride, kInf);
      for (int s = 0; s <= full; ++s) {
        for (int wmask = s;; wmask = (wmask - 1) & s) {
          int sa = s ^ wmask;
          for (int j1 = 0; j1 <= accum; ++j1) {
            long long base = cur[idx(sa, j1)];
            if (base >= kInf) continue;
            int qmax = (j1 >= 1) ? szsub[son] : 0;
            for (int qq = 0; qq <= qmax; ++qq) {
              long long sv = sonf[idx(wmask, qq)];
              if (sv >= kInf) continue;
              long long extra = (qq > 0) ? 0 : spec.ce[son];
              long long cand = base + extra + sv;
              long long& slot = next[idx(s, j1 + qq)];
              if (cand < slot) slot = cand;
            }
          }
          if (wmask == 0) break;
        }
      }
      accum += szsub[son];
      cur = std::move(next);
      stages[i].push_back(cur);
    }
    // Close pending components that exactly match an unused part size.
    std::vector<long long> fin = cur;
    for (int s = 0; s <= full; ++s)
      for (int j = 1; j <= accum; ++j) {
        long long v = cur[idx(s, j)];
        if (v >= kInf) continue;
        for (int p = 1; p <= k; ++p)
          if (j == spec.sz[p] && !((s >> (p - 1)) & 1)) {
            long long& slot = fin[idx(s | (1 << (p - 1)), 0)];
            if (v < slot) slot = v;
          }
      }
    final_tab[i] = std::move(fin);
  }

  ConnectedPartitionResult res;
  res.assignment.assign(t.n + 1, 0);
  long long best = final_tab[t.root][idx(full, 0)];
  if (best >= kInf) return res;
  res.feasible = true;
  res.min_cost = best;

  // Traceback. pending = the part id the open component will eventually form.
  std::function<void(int, int, int, long long, int)> trace =
      [&](int i, int j, int s, long long val, int pending) {
        int ns = static_cast<int>(t.children[i].size());
        if (j == 0 && stages[i][ns][idx(s, 0)] != val) {
          // Produced by the closing step.
          for (int p = 1; p <= k; ++p) {
            if (!((s >> (p - 1)) & 1)) continue;
            int s0 = s ^ (1 << (p - 1));
            if (spec.sz[p] <= t.n &&
                stages[i][ns][idx(s0, spec.sz[p])] == val) {
              trace(i, spec.sz[p], s0, val, p);
              return;
            }
          }
          assert(false && "closing traceback failed");
        }
        // Unwind the son merges.
        for (int x = ns; x >= 1; --x) {
          int son = t.children[i][x - 1];
          bool found = false;
          for (int wmask = s; !found; wmask = (wmask - 1) & s) {
            int sa = s ^ wmask;
            for (int qq = 0; qq <= szsub[son] && !found; ++qq) {
              if (qq > j - 1 && !(j == 0 && qq == 0)) break;
              long long sv = final_tab[son][idx(wmask, qq)];
              long long base = stages[i][x - 1][idx(sa, j - qq)];
              if (sv >= kInf || base >= kInf) continue;
              long long extra = (qq > 0) ? 0 : spec.ce[son];
              if (base + extra + sv == val) {
                trace(son, qq, wmask, sv, qq > 0 ? pending : 0);
                s = sa;
                j -= qq;
                val = base;
                found = true;
              }
            }
            if (wmask == 0) break;
          }
          assert(found && "merge traceback failed");
        }
        assert(s == 0);
        if (j == 1) {
          assert(pending > 0);
          res.assignment[i] = pending;
        }
      };
  trace(t.root, 0, full, best, 0);
  return res;
}

bool validate_connected_partition(const RootedTree& t,
                                  const ConnectedPartSpec& spec,
                                  const ConnectedPartitionResult& r) {
  if (!r.feasible) return true;
  std::vector<long long> size(spec.k + 1, 0);
  for (int v = 1; v <= t.n; ++v) {
    if (r.assignment[v] < 0 || r.assignment[v] > spec.k) return false;
    if (r.assignment[v] > 0) ++size[r.assignment[v]];
  }
  for (int p = 1; p <= spec.k; ++p)
    if (size[p] != spec.sz[p]) return false;
  // Each part connected: internal edge count == size - 1.
  for (int p = 1; p <= spec.k; ++p) {
    long long internal = 0;
    for (int v = 1; v <= t.n; ++v)
      if (v != t.root && r.assignment[v] == p &&
          r.assignment[t.parent[v]] == p)
        ++internal;
    if (internal != size[p] - 1) return false;
  }
  // Recompute the cost from the assignment.
  long long cost = 0;
  for (int v = 1; v <= t.n; ++v) {
    if (r.assignment[v] == 0) cost += spec.cv[v];
    if (v != t.root &&
        !(r.assignment[v] > 0 && r.assignment[v] == r.assignment[t.parent[v]]))
      cost += spec.ce[v];
  }
  return cost == r.min_cost;
}

}  // namespace treeopt
