#include "treeopt/flownet.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <queue>

namespace treeopt {

namespace {

constexpr long long kInfCost = std::numeric_limits<long long>::max() / 4;

// Successive shortest augmenting paths with vertex potentials.
class Mcmf {
 public:
  explicit Mcmf(int n) : n_(n), head_(n + 1, -1) {}

  void add(int u, int v, long long cap, long long cost) {
    arcs_.push_back({v, head_[u], cap, cost});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0, -cost});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  // Returns (max flow value, min cost among max flows).
  std::pair<long long, long long> run(int s, int t) {
    long long value = 0, cost = 0;
    std::vector<long long> pot(n_ + 1, 0);  // all forward costs nonnegative
    std::vector<long long> dist(n_ + 1);
    std::vector<int> prev_arc(n_ + 1);
    std::vector<char> done(n_ + 1);
    using Item = std::pair<long long, int>;
    while (true) {
      std::fill(dist.begin(), dist.end(), kInfCost);
      std::fill(done.begin(), done.end(), 0);
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
      dist[s] = 0;
      pq.push({0, s});
      while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap <= 0) continue;
          int v = arcs_[a].to;
          long long nd = d + arcs_[a].cost + pot[u] - pot[v];
          if (nd < dist[v]) {
            dist[v] = nd;
            prev_arc[v] = a;
            pq.push({nd, v});
          }
        }
      }
      if (dist[t] >= kInfCost) break;
      for (int v = 1; v <= n_; ++v)
        if (dist[v] < kInfCost) pot[v] += dist[v];
      long long push = kInfCost;
      for (int v = t; v != s; v = arcs_[prev_arc[v] ^ 1].to)
        push = std::min(push, arcs_[prev_arc[v]].cap);
      for (int v = t; v != s; v = arcs_[prev_arc[v] ^ 1].to) {
        arcs_[prev_arc[v]].cap -= push;
        arcs_[prev_arc[v] ^ 1].cap += push;
        cost += push * arcs_[prev_arc[v]].cost;
      }
      value += push;
    }
    return {value, cost};
  }

  // Flow on the k-th added edge = capacity moved to its reverse arc.
  long long flow_on(int k) const { return arcs_[2 * k + 1].cap; }

 private:
  struct Arc {
    int to, next;
    long long cap, cost;
  };
  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

void validate_network(const FlowNetwork& f) {
  if (f.n < 1) throw InputError("flow network needs at least one vertex");
  for (const auto& e : f.edges) {
    if (e.from < 1 || e.from > f.n || e.to < 1 || e.to > f.n)
      throw InputError("flow edge endpoint out of range");
    if (e.lower < 0 || e.lower > e.upper)
      throw InputError("flow edge needs 0 <= lower <= upper");
    if (e.cost < 0) throw InputError("flow edge cost must be nonnegative");
  }
  if (f.return_edge >= static_cast<int>(f.edges.size()))
    throw InputError("return_edge index out of range");
}

// Algorithm A with an optional cost override and the value measured on the
// designated return edge (net outflow of s when there is none).
FlowAssignment run_feasible(const FlowNetwork& f, int s, int t,
                            bool use_costs) {
  validate_network(f);
  if (s < 1 || s > f.n || t < 1 || t > f.n)
    throw InputError("source or sink out of range");
  int sp = f.n + 1, tp = f.n + 2;
  Mcmf mf(f.n + 2);
  std::vector<long long> in_lb(f.n + 1, 0), out_lb(f.n + 1, 0);
  for (const auto& e : f.edges) {
    mf.add(e.from, e.to, e.upper - e.lower, use_costs ? e.cost : 0);
    in_lb[e.to] += e.lower;
    out_lb[e.from] += e.lower;
  }
  long long demand = 0;
  int naux = 0;
  std::vector<int> aux_from(f.n + 1, -1);
  for (int u = 1; u <= f.n; ++u) {
    if (in_lb[u] > 0) {
      aux_from[u] = static_cast<int>(f.edges.size()) + naux;
      mf.add(sp, u, in_lb[u], 0);
      demand += in_lb[u];
      ++naux;
    }
    if (out_lb[u] > 0) {
      mf.add(u, tp, out_lb[u], 0);
      ++naux;
    }
  }
  auto [value, cost] = mf.run(sp, tp);
  (void)cost;
  FlowAssignment res;
  if (value != demand) return res;  // infeasible
  res.feasible = true;
  res.flow.resize(f.edges.size());
  for (size_t i = 0; i < f.edges.size(); ++i) {
    res.flow[i] = f.edges[i].lower + mf.flow_on(static_cast<int>(i));
    res.cost += res.flow[i] * f.edges[i].cost;
  }
  if (f.return_edge >= 0) {
    res.value = res.flow[f.return_edge];
  } else {
    for (size_t i = 0; i < f.edges.size(); ++i) {
      if (f.edges[i].from == s) res.value += res.flow[i];
      if (f.edges[i].to == s) res.value -= res.flow[i];
    }
  }
  if (!check_flow(f, res))
    throw ContractError("feasible flow violates bounds or conservation");
  return res;
}

// Cancels positive-flow cycles that sit above the lower bounds, leaving a
// path-decomposable assignment with the same value and no higher cost.
void cancel_cycles(const FlowNetwork& f, FlowAssignment& fa) {
  int m = static_cast<int>(f.edges.size());
  std::vector<std::vector<int>> out(f.n + 1);
  for (int i = 0; i < m; ++i)
    if (i != f.return_edge) out[f.edges[i].from].push_back(i);
  auto slack = [&](int e) { return fa.flow[e] - f.edges[e].lower; };
  while (true) {
    // color: 0 unseen, 1 on stack, 2 done; via[v] = edge used to enter v
    std::vector<char> color(f.n + 1, 0);
    std::vector<int> via(f.n + 1, -1);
    int cycle_entry = -1;
    for (int start = 1; start <= f.n && cycle_entry < 0; ++start) {
      if (color[start]) continue;
      std::vector<std::pair<int, size_t>> stack{{start, 0}};
      color[start] = 1;
      while (!stack.empty() && cycle_entry < 0) {
        auto& [v, idx] = stack.back();
        bool advanced = false;
        while (idx < out[v].size()) {
          int e = out[v][idx++];
          if (slack(e) <= 0) continue;
          int w = f.edges[e].to;
          if (color[w] == 1) {
            via[w] = e;
            cycle_entry = w;
            advanced = true;
            break;
          }
          if (color[w] == 0) {
            color[w] = 1;
            via[w] = e;
            stack.emplace_back(w, 0);
            advanced = true;
            break;
          }
        }
        if (cycle_entry >= 0) break;
        if (!advanced) {
          color[v] = 2;
          stack.pop_back();
        }
      }
    }
    if (cycle_entry < 0) break;
    // Walk the cycle backwards from the re-entered vertex.
    std::vector<int> cyc;
    int v = cycle_entry;
    do {
      int e = via[v];
      cyc.push_back(e);
      v = f.edges[e].from;
    } while (v != cycle_entry);
    long long delta = kInfCost;
    for (int e : cyc) delta = std::min(delta, slack(e));
    assert(delta > 0);
    for (int e : cyc) {
      fa.flow[e] -= delta;
      fa.cost -= delta * f.edges[e].cost;
    }
  }
}

}  // namespace

int FlowNetwork::add_edge(int u, int v, long long lb, long long ub,
                          long long c) {
  edges.push_back({u, v, lb, ub, c});
  return static_cast<int>(edges.size()) - 1;
}

FlowAssignment min_cost_max_flow(const FlowNetwork& net) {
  validate_network(net);
  for (const auto& e : net.edges)
    if (e.lower != 0)
      throw InputError("min_cost_max_flow requires zero lower bounds");
  Mcmf mf(net.n);
  for (const auto& e : net.edges) mf.add(e.from, e.to, e.upper, e.cost);
  FlowAssignment res;
  res.feasible = true;
  std::tie(res.value, res.cost) = mf.run(net.s, net.t);
  res.flow.resize(net.edges.size());
  for (size_t i = 0; i < net.edges.size(); ++i)
    res.flow[i] = mf.flow_on(static_cast<int>(i));
  return res;
}

FlowAssignment feasible_flow(const FlowNetwork& f, int s, int t) {
  return run_feasible(f, s, t, true);
}

FlowAssignment min_feasible_flow(const FlowNetwork& f, int s, int t) {
  FlowAssignment base = run_feasible(f, s, t, false);
  if (!base.feasible) return base;
  long long gmax = base.value;

  // G'': fresh source snew feeding s through a capacity-x edge; the (t,s)
  // return edge, if any, is redirected to (t,snew) so x truly caps the value.
  FlowNetwork g2;
  g2.n = f.n + 1;
  int snew = f.n + 1;
  g2.edges = f.edges;
  if (f.return_edge >= 0) g2.edges[f.return_edge].to = snew;
  int xedge = g2.add_edge(snew, s, 0, 0, 0);
  g2.s = snew;
  g2.t = t;

  auto test = [&](long long x, bool use_costs) {
    g2.edges[xedge].upper = x;
    return run_feasible(g2, snew, t, use_costs);
  };

  long long lo = 0, hi = gmax;
  long long max_bad = -1, min_good = gmax;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (test(mid, false).feasible) {
      hi = mid;
      min_good = std::min(min_good, mid);
    } else {
      lo = mid + 1;
      max_bad = std::max(max_bad, mid);
    }
  }
  if (max_bad >= min_good)
    throw ContractError("binary search feasibility is not monotone");

  FlowAssignment best = test(lo, true);
  if (!best.feasible)
    throw ContractError("minimal x re-test turned infeasible");
  FlowAssignment res;
  res.feasible = true;
  res.value = best.flow[xedge];
  res.flow.assign(best.flow.begin(), best.flow.begin() + f.edges.size());
  for (size_t i = 0; i < f.edges.size(); ++i)
    res.cost += res.flow[i] * f.edges[i].cost;
  return res;
}

FlowNetwork split_vertices(const BoundedDigraph& g) {
  if (g.n < 1) throw InputError("digraph needs at least one vertex");
  if (static_cast<int>(g.vertex.size()) != g.n + 1)
    throw InputError("vertex table must have size n+1");
  long long inf = 1;
  for (int u = 1; u <= g.n; ++u) {
    if (g.vertex[u].lbv < 0 || g.vertex[u].lbv > g.vertex[u].ubv)
      throw InputError("vertex needs 0 <= lbv <= ubv");
    inf += g.vertex[u].ubv;
  }
  for (const auto& e : g.edges) {
    if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
      throw InputError("edge endpoint out of range");
    if (e.lbe < 0 || e.lbe > e.ube)
      throw InputError("edge needs 0 <= lbe <= ube");
    inf += e.ube;
  }
  FlowNetwork net;
  net.n = 2 * g.n + 2;
  net.s = 2 * g.n + 1;
  net.t = 2 * g.n + 2;
  auto vin = [](int u) { return 2 * u - 1; };
  auto vout = [](int u) { return 2 * u; };
  for (int u = 1; u <= g.n; ++u)
    net.add_edge(vin(u), vout(u), g.vertex[u].lbv, g.vertex[u].ubv,
                 g.vertex[u].cv);
  for (const auto& e : g.edges)
    net.add_edge(vout(e.u), vin(e.v), e.lbe, e.ube, e.ce);
  for (int u = 1; u <= g.n; ++u) {
    if (g.vertex[u].is_source) net.add_edge(net.s, vin(u), 0, inf, 0);
    if (g.vertex[u].is_dest) net.add_edge(vout(u), net.t, 0, inf, 0);
  }
  net.add_edge(net.s, net.t, 0, inf, 0);
  net.return_edge = net.add_edge(net.t, net.s, 0, inf, 0);
  return net;
}

StreamPlan min_streams(const BoundedDigraph& g) {
  // Acyclicity (Kahn).
  {
    std::vector<int> indeg(g.n + 1, 0);
    std::vector<std::vector<int>> out(g.n + 1);
    for (const auto& e : g.edges) {
      if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
        throw InputError("edge endpoint out of range");
      ++indeg[e.v];
      out[e.u].push_back(e.v);
    }
    std::vector<int> queue;
    for (int u = 1; u <= g.n; ++u)
      if (indeg[u] == 0) queue.push_back(u);
    size_t seen = 0;
    while (seen < queue.size()) {
      int u = queue[seen++];
      for (int v : out[u])
        if (--indeg[v] == 0) queue.push_back(v);
    }
    if (static_cast<int>(seen) != g.n)
      throw InputError("stream graph must be acyclic");
  }

  FlowNetwork net = split_vertices(g);
  FlowAssignment fa = min_feasible_flow(net, net.s, net.t);
  StreamPlan plan;
  if (!fa.feasible) return plan;
  plan.feasible = true;
  plan.p = fa.value;
  cancel_cycles(net, fa);
  std::vector<std::vector<int>> raw = decompose_paths(net, fa);

  for (const auto& rp : raw) {
    std::vector<int> path;
    for (size_t i = 1; i + 1 < rp.size(); ++i) {
      int orig = (rp[i] + 1) / 2;
      if (path.empty() || path.back() != orig) path.push_back(orig);
    }
    if (path.empty())
      throw ContractError("minimum flow routed through the direct s-t edge");
    plan.paths.push_back(std::move(path));
  }
  if (static_cast<long long>(plan.paths.size()) != plan.p)
    throw ContractError("path count differs from the flow value");

  // npv lives on edge i (i < n); npe on edges n..n+m-1, by construction.
  for (int u = 1; u <= g.n; ++u)
    plan.cost_s += (fa.flow[u - 1] - g.vertex[u].lbv) * g.vertex[u].cv;
  for (size_t i = 0; i < g.edges.size(); ++i)
    plan.cost_s += (fa.flow[g.n + i] - g.edges[i].lbe) * g.edges[i].ce;
  return plan;
}

std::vector<std::vector<int>> decompose_paths(const FlowNetwork& f,
                                              const FlowAssignment& fa) {
  if (!fa.feasible || fa.flow.size() != f.edges.size())
    throw ContractError("decompose_paths needs a feasible assignment");
  if (!check_flow(f, fa))
    throw ContractError("assignment violates bounds or conservation");
  std::vector<long long> flow = fa.flow;
  std::vector<long long> used(f.edges.size(), 0);
  std::vector<std::vector<int>> out(f.n + 1);
  for (size_t i = 0; i < f.edges.size(); ++i)
    if (static_cast<int>(i) != f.return_edge)
      out[f.edges[i].from].push_back(static_cast<int>(i));
  std::vector<size_t> ptr(f.n + 1, 0);
  auto next_edge = [&](int v) -> int {
    while (ptr[v] < out[v].size() && flow[out[v][ptr[v]]] <= 0) ++ptr[v];
    return ptr[v] < out[v].size() ? out[v][ptr[v]] : -1;
  };

  std::vector<std::vector<int>> paths;
  std::vector<char> onwalk(f.n + 1, 0);
  while (next_edge(f.s) != -1) {
    std::vector<int> pe;  // edges of the current walk
    int v = f.s;
    onwalk[v] = 1;
    while (v != f.t) {
      int e = next_edge(v);
      if (e < 0) throw ContractError("flow walk dead-ends before the sink");
      int w = f.edges[e].to;
      if (onwalk[w]) throw ContractError("flow contains a positive cycle");
      onwalk[w] = 1;
      pe.push_back(e);
      v = w;
    }
    long long fp = kInfCost;
    for (int e : pe) fp = std::min(fp, flow[e]);
    for (int e : pe) {
      flow[e] -= fp;
      used[e] += fp;
    }
    std::vector<int> vertices{f.s};
    for (int e : pe) vertices.push_back(f.edges[e].to);
    for (long long c = 0; c < fp; ++c) paths.push_back(vertices);
    onwalk[f.s] = 0;
    for (int e : pe) onwalk[f.edges[e].to] = 0;
  }
  for (size_t i = 0; i < f.edges.size(); ++i)
    if (static_cast<int>(i) != f.return_edge && used[i] != fa.flow[i])
      throw ContractError("flow is not decomposable into s-t paths");
  return paths;
}

PathCover min_path_cover(int n,
                         const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw InputError("path cover needs at least one vertex");
  std::vector<std::vector<int>> out(n + 1);
  {
    std::vector<int> indeg(n + 1, 0);
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw InputError("edge endpoint out of range");
      out[u].push_back(v);
      ++indeg[v];
    }
    std::vector<int> queue;
    for (int u = 1; u <= n; ++u)
      if (indeg[u] == 0) queue.push_back(u);
    size_t seen = 0;
    while (seen < queue.size()) {
      int u = queue[seen++];
      for (int v : out[u])
        if (--indeg[v] == 0) queue.push_back(v);
    }
    if (static_cast<int>(seen) != n)
      throw InputError("path cover input must be acyclic");
  }

  // Kuhn's algorithm on the x_i / y_j bipartite construction.
  std::vector<int> match_y(n + 1, 0);
  std::vector<char> visited(n + 1, 0);
  std::function<bool(int)> tryk = [&](int x) -> bool {
    for (int y : out[x]) {
      if (visited[y]) continue;
      visited[y] = 1;
      if (match_y[y] == 0 || tryk(match_y[y])) {
        match_y[y] = x;
        return true;
      }
    }
    return false;
  };
  long long matched = 0;
  for (int x = 1; x <= n; ++x) {
    std::fill(visited.begin(), visited.end(), 0);
    if (tryk(x)) ++matched;
  }

  PathCover res;
  res.p = n - matched;
  std::vector<int> next(n + 1, 0);
  std::vector<char> has_pred(n + 1, 0);
  for (int y = 1; y <= n; ++y)
    if (match_y[y] != 0) {
      next[match_y[y]] = y;
      has_pred[y] = 1;
    }
  for (int u = 1; u <= n; ++u) {
    if (has_pred[u]) continue;
    std::vector<int> path;
    for (int v = u; v != 0; v = next[v]) path.push_back(v);
    res.paths.push_back(std::move(path));
  }
  return res;
}

bool check_flow(const FlowNetwork& f, const FlowAssignment& fa) {
  if (fa.flow.size() != f.edges.size()) return false;
  std::vector<long long> balance(f.n + 1, 0);
  for (size_t i = 0; i < f.edges.size(); ++i) {
    const auto& e = f.edges[i];
    if (fa.flow[i] < e.lower || fa.flow[i] > e.upper) return false;
    balance[e.from] -= fa.flow[i];
    balance[e.to] += fa.flow[i];
  }
  for (int v = 1; v <= f.n; ++v)
    if (v != f.s && v != f.t && balance[v] != 0) return false;
  return true;
}

}  // namespace treeopt
