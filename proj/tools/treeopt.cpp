#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "treeopt/coloring.hpp"
#include "treeopt/counting.hpp"
#include "treeopt/cycle_completion.hpp"
#include "treeopt/flownet.hpp"
#include "treeopt/gen.hpp"
#include "treeopt/io.hpp"
#include "treeopt/matching.hpp"
#include "treeopt/oracles.hpp"
#include "treeopt/partitioning.hpp"
#include "treeopt/spanning.hpp"
#include "treeopt/tree_core.hpp"
#include "treeopt/treebuild.hpp"

namespace {

using namespace treeopt;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json read_doc(const std::string& path) {
  if (path.empty() || path == "-") return load_instance(std::cin);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open input file: " + path);
  return load_instance(f);
}

void write_doc(const Json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot open output file: " + path);
  f << doc.dump(2) << "\n";
}

int emit(Json& res, const Timer& timer, const std::string& out, bool feasible) {
  res["status"] = feasible ? "ok" : "infeasible";
  res["timing_ms"] = timer.ms();
  write_doc(res, out);
  return feasible ? 0 : 2;
}

Json extra_edges_json(const std::vector<ExtraEdge>& es) {
  Json a = Json::array();
  for (const auto& e : es) a.push_back({e.u, e.v, e.w});
  return a;
}

Json pairs_json(const std::vector<std::pair<int, int>>& es) {
  Json a = Json::array();
  for (const auto& [u, v] : es) a.push_back({u, v});
  return a;
}

Json tail_json(const std::vector<int>& v) {
  return Json(std::vector<int>(v.begin() + 1, v.end()));
}

std::vector<std::vector<int>> tree_adjacency(const RootedTree& t) {
  std::vector<std::vector<int>> adj(t.n + 1);
  for (int v = 1; v <= t.n; ++v)
    if (v != t.root) {
      adj[t.parent[v]].push_back(v);
      adj[v].push_back(t.parent[v]);
    }
  return adj;
}

std::vector<std::tuple<int, int, long long>> extended_edges(
    const RootedTree& t) {
  std::vector<std::tuple<int, int, long long>> edges;
  auto wdiff = [&](int x, int y) {
    long long d = t.vertex_weight[x] - t.vertex_weight[y];
    return d < 0 ? -d : d;
  };
  for (int v = 1; v <= t.n; ++v) {
    if (v != t.root) edges.emplace_back(t.parent[v], v, wdiff(t.parent[v], v));
    const auto& sons = t.children[v];
    for (size_t i = 0; i < sons.size(); ++i)
      for (size_t j = i + 1; j < sons.size(); ++j)
        edges.emplace_back(sons[i], sons[j], wdiff(sons[i], sons[j]));
  }
  return edges;
}

RootedTree bfs_spanning_tree(const WeightedGraph& g, int root) {
  std::vector<std::vector<int>> adj(g.n + 1);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> parent(g.n + 1, 0), queue{root};
  std::vector<char> seen(g.n + 1, 0);
  seen[root] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int v : adj[queue[qi]])
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = queue[qi];
        queue.push_back(v);
      }
  if (static_cast<int>(queue.size()) != g.n)
    throw InputError("graph is not connected");
  return from_parents(g.n, parent, root);
}

int run_cycle_complete(const std::string& in, const std::string& out,
                       const std::string& mode) {
  Json doc = read_doc(in);
  RootedTree t = tree_from_json(doc);
  Json res;
  res["algorithm"] = mode;
  Timer timer;
  if (mode == "minimax") {
    MinimaxResult r = solve_minimax(t, extras_from_json(doc));
    if (r.feasible) {
      if (!covers_exactly_once(t, r.chosen_edges))
        throw ContractError("minimax witness fails the cover check");
      res["w_max"] = r.w_max;
      res["chosen_edges"] = extra_edges_json(r.chosen_edges);
    }
    return emit(res, timer, out, r.feasible);
  }
  CycleCompletionResult r;
  if (mode == "greedy-unit") r = greedy_unit_any_pair(t);
  else if (mode == "quadratic") r = solve_quadratic(t, extras_from_json(doc));
  else r = solve_fast(t, extras_from_json(doc));
  if (r.feasible) {
    if (!covers_exactly_once(t, r.chosen_edges))
      throw ContractError("witness fails the cover check");
    res["total_weight"] = r.total_weight;
    res["chosen_edges"] = extra_edges_json(r.chosen_edges);
  }
  return emit(res, timer, out, r.feasible);
}

int run_partition_bounded(const std::string& in, const std::string& out,
                          long long q_flag) {
  Json doc = read_doc(in);
  RootedTree t = tree_from_json(doc);
  long long q = q_flag;
  if (q <= 0) {
    if (!doc.contains("Q")) throw InputError("Q not given (flag or document)");
    q = doc["Q"].get<long long>();
  }
  Json res;
  res["algorithm"] = "partition-bounded";
  res["Q"] = q;
  Timer timer;
  Partition p = partition_bounded(t, q);
  if (p.feasible) {
    if (!validate_partition(t, p, q))
      throw ContractError("partition fails validation");
    res["part_count"] = p.part_count;
    res["part"] = tail_json(p.part);
    res["representative"] = tail_json(p.representative);
  }
  return emit(res, timer, out, p.feasible);
}

int run_partition_connected(const std::string& in, const std::string& out) {
  Json doc = read_doc(in);
  RootedTree t = tree_from_json(doc);
  ConnectedPartSpec spec = connected_spec_from_json(doc, t.n);
  Json res;
  res["algorithm"] = "partition-connected";
  Timer timer;
  ConnectedPartitionResult r = partition_connected(t, spec);
  if (r.feasible) {
    if (!validate_connected_partition(t, spec, r))
      throw ContractError("connected partition fails validation");
    res["min_cost"] = r.min_cost;
    res["assignment"] = tail_json(r.assignment);
  }
  return emit(res, timer, out, r.feasible);
}

int run_min_streams(const std::string& in, const std::string& out) {
  Json doc = read_doc(in);
  BoundedDigraph g = dag_from_json(doc);
  Json res;
  res["algorithm"] = "min-streams";
  Timer timer;
  StreamPlan plan = min_streams(g);
  if (plan.feasible) {
    res["p"] = plan.p;
    res["cost_S"] = plan.cost_s;
    res["paths"] = plan.paths;
  }
  return emit(res, timer, out, plan.feasible);
}

int run_path_cover(const std::string& in, const std::string& out) {
  Json doc = read_doc(in);
  BoundedDigraph g = dag_from_json(doc);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
  Json res;
  res["algorithm"] = "path-cover";
  Timer timer;
  PathCover pc = min_path_cover(g.n, edges);
  res["p"] = pc.p;
  res["paths"] = pc.paths;
  return emit(res, timer, out, true);
}

Json dcmst_json(const WeightedGraph& g, const DcmstResult& r) {
  Json res;
  if (!r.feasible) {
    if (!r.diagnostic.empty()) res["diagnostic"] = r.diagnostic;
    return res;
  }
  res["total_weight"] = r.total_weight;
  res["degree_r"] = r.degree_r;
  Json edges = Json::array();
  for (int idx : r.edge_indices) {
    const WEdge& e = g.edges[idx];
    edges.push_back({e.u, e.v, e.w});
  }
  res["edges"] = edges;
  return res;
}

int run_dcmst(const std::string& in, const std::string& out, int r_flag,
              int k_flag) {
  Json doc = read_doc(in);
  WeightedGraph g = graph_from_json(doc);
  int r = r_flag > 0 ? r_flag : doc.value("r", 0);
  int k = k_flag > 0 ? k_flag : doc.value("k", 0);
  if (r <= 0 || k <= 0)
    throw InputError("r and k must be given (flags or document)");
  Json res;
  Timer timer;
  DcmstResult d = dcmst(g, r, k);
  res = dcmst_json(g, d);
  res["algorithm"] = "dcmst";
  return emit(res, timer, out, d.feasible);
}

int run_match_extended(const std::string& in, const std::string& out) {
  Json doc = read_doc(in);
  RootedTree t = tree_from_json(doc, true);
  Json res;
  res["algorithm"] = "match-extended";
  Timer timer;
  WeightedMatchingResult r = extended_tree_max_weight_matching(t);
  res["weight"] = r.weight;
  res["edges"] = pairs_json(r.edges);
  return emit(res, timer, out, true);
}

int run_match_power(const std::string& in, const std::string& out, int k) {
  Json doc = read_doc(in);
  RootedTree t = instance_kind(doc) == "weighted-graph"
                     ? bfs_spanning_tree(graph_from_json(doc), 1)
                     : tree_from_json(doc);
  Json res;
  res["algorithm"] = "match-power";
  res["k"] = k;
  Timer timer;
  PowerMatchingResult r = power_matching(t, k);
  res["edges"] = pairs_json(r.edges);
  res["size"] = r.edges.size();
  return emit(res, timer, out, true);
}

int run_grundy(const std::string& in, const std::string& out) {
  Json doc = read_doc(in);
  RootedTree t = tree_from_json(doc);
  Json res;
  res["algorithm"] = "grundy";
  Timer timer;
  GrundyResult g = grundy_all(t);
  res["grundy"] = g.grundy;
  res["c1"] = tail_json(g.c1);
  res["cmax"] = tail_json(g.cmax);
  res["colmax"] = tail_json(g.colmax);
  return emit(res, timer, out, true);
}

int run_build(const std::string& in, const std::string& out,
              const std::string& method) {
  Json doc = read_doc(in);
  LeafSeq seq = leafseq_from_json(doc);
  Json res;
  res["algorithm"] = "build-min-height:" + method;
  Timer timer;
  if (method == "dp") {
    res["height"] = hmin_dp(seq);
    return emit(res, timer, out, true);
  }
  BuiltTree b = method == "mergesim" ? build_mergesim(seq) : build_linear(seq);
  if (!validate_built_tree(seq, b))
    throw ContractError("built tree fails validation");
  res["height"] = b.height[b.root];
  res["n_leaves"] = b.n_leaves;
  res["root"] = b.root;
  res["left"] = tail_json(b.left);
  res["right"] = tail_json(b.right);
  if (method == "linear") {
    res["stack_pushes"] = b.stack_pushes;
    res["stack_pops"] = b.stack_pops;
  }
  return emit(res, timer, out, true);
}

int run_count_labeled(const std::string& out, int n, int p) {
  Json res;
  res["algorithm"] = "count-labeled-leaves";
  res["n"] = n;
  res["p"] = p;
  Timer timer;
  res["count"] = labeled_trees_with_leaves(n, p).get_str();
  return emit(res, timer, out, true);
}

int run_count_constrained(const std::string& in, const std::string& out,
                          bool slow) {
  Json doc = read_doc(in);
  ConstraintSet cs = constraints_from_json(doc);
  if (!doc.contains("n")) throw InputError("count-spec requires n");
  int n = doc["n"].get<int>();
  Json res;
  res["algorithm"] = slow ? "count-constrained:slow" : "count-constrained";
  res["n"] = n;
  Timer timer;
  BigNat c = slow ? unlabeled_constrained_slow(n, cs)
                  : unlabeled_constrained(n, cs);
  res["count"] = c.get_str();
  return emit(res, timer, out, true);
}

int run_oracle(const std::string& in, const std::string& out,
               const std::string& name) {
  Json doc = read_doc(in);
  Json res;
  res["algorithm"] = "oracle:" + name;
  Timer timer;
  if (name == "cycle-completion") {
    RootedTree t = tree_from_json(doc);
    CycleCompletionResult r = brute_cycle_completion(t, extras_from_json(doc));
    if (r.feasible) {
      res["total_weight"] = r.total_weight;
      res["chosen_edges"] = extra_edges_json(r.chosen_edges);
    }
    return emit(res, timer, out, r.feasible);
  }
  if (name == "unit-cycle") {
    CycleCompletionResult r = brute_unit_cycle_completion(tree_from_json(doc));
    if (r.feasible) res["total_weight"] = r.total_weight;
    return emit(res, timer, out, r.feasible);
  }
  if (name == "connected-partition") {
    RootedTree t = tree_from_json(doc);
    ConnectedPartitionResult r =
        brute_connected_partition(t, connected_spec_from_json(doc, t.n));
    if (r.feasible) {
      res["min_cost"] = r.min_cost;
      res["assignment"] = tail_json(r.assignment);
    }
    return emit(res, timer, out, r.feasible);
  }
  if (name == "grundy") {
    RootedTree t = tree_from_json(doc);
    res["grundy"] = brute_grundy(tree_adjacency(t));
    return emit(res, timer, out, true);
  }
  if (name == "matching") {
    RootedTree t = tree_from_json(doc, true);
    res["weight"] = brute_max_weight_matching(t.n, extended_edges(t));
    return emit(res, timer, out, true);
  }
  if (name == "min-streams") {
    StreamPlan plan = brute_min_streams(dag_from_json(doc));
    if (plan.feasible) {
      res["p"] = plan.p;
      res["cost_S"] = plan.cost_s;
      res["paths"] = plan.paths;
    }
    return emit(res, timer, out, plan.feasible);
  }
  if (name == "dcmst") {
    WeightedGraph g = graph_from_json(doc);
    if (!doc.contains("r") || !doc.contains("k"))
      throw InputError("dcmst oracle requires r and k in the document");
    DcmstResult d =
        brute_spanning_trees(g, doc["r"].get<int>(), doc["k"].get<int>());
    Json body = dcmst_json(g, d);
    body["algorithm"] = res["algorithm"];
    return emit(body, timer, out, d.feasible);
  }
  throw InputError("unknown oracle: " + name);
}

int run_check(const std::string& in, const std::string& out,
              const std::string& problem) {
  Json doc = read_doc(in);
  Json res;
  res["algorithm"] = "check:" + problem;
  res["problem"] = problem;
  Timer timer;
  bool agree = false;
  if (problem == "cycle-completion") {
    RootedTree t = tree_from_json(doc);
    auto extras = extras_from_json(doc);
    CycleCompletionResult a = solve_fast(t, extras);
    CycleCompletionResult b = brute_cycle_completion(t, extras);
    agree = a.feasible == b.feasible &&
            (!a.feasible || a.total_weight == b.total_weight);
    res["main"] = a.feasible ? Json(a.total_weight) : Json("infeasible");
    res["oracle"] = b.feasible ? Json(b.total_weight) : Json("infeasible");
  } else if (problem == "connected-partition") {
    RootedTree t = tree_from_json(doc);
    ConnectedPartSpec spec = connected_spec_from_json(doc, t.n);
    ConnectedPartitionResult a = partition_connected(t, spec);
    ConnectedPartitionResult b = brute_connected_partition(t, spec);
    agree =
        a.feasible == b.feasible && (!a.feasible || a.min_cost == b.min_cost);
    res["main"] = a.feasible ? Json(a.min_cost) : Json("infeasible");
    res["oracle"] = b.feasible ? Json(b.min_cost) : Json("infeasible");
  } else if (problem == "grundy") {
    RootedTree t = tree_from_json(doc);
    int a = grundy_all(t).grundy;
    int b = brute_grundy(tree_adjacency(t));
    agree = a == b;
    res["main"] = a;
    res["oracle"] = b;
  } else if (problem == "matching") {
    RootedTree t = tree_from_json(doc, true);
    long long a = extended_tree_max_weight_matching(t).weight;
    long long b = brute_max_weight_matching(t.n, extended_edges(t));
    agree = a == b;
    res["main"] = a;
    res["oracle"] = b;
  } else if (problem == "min-streams") {
    BoundedDigraph g = dag_from_json(doc);
    StreamPlan a = min_streams(g);
    StreamPlan b = brute_min_streams(g);
    agree = a.feasible == b.feasible &&
            (!a.feasible || (a.p == b.p && a.cost_s == b.cost_s));
    res["main"] =
        a.feasible ? Json({{"p", a.p}, {"cost_S", a.cost_s}}) : Json("infeasible");
    res["oracle"] =
        b.feasible ? Json({{"p", b.p}, {"cost_S", b.cost_s}}) : Json("infeasible");
  } else if (problem == "dcmst") {
    WeightedGraph g = graph_from_json(doc);
    if (!doc.contains("r") || !doc.contains("k"))
      throw InputError("dcmst check requires r and k in the document");
    int r = doc["r"].get<int>(), k = doc["k"].get<int>();
    DcmstResult a = dcmst(g, r, k);
    DcmstResult b = brute_spanning_trees(g, r, k);
    agree = a.feasible == b.feasible &&
            (!a.feasible || a.total_weight == b.total_weight);
    res["main"] = a.feasible ? Json(a.total_weight) : Json("infeasible");
    res["oracle"] = b.feasible ? Json(b.total_weight) : Json("infeasible");
  } else {
    throw InputError("unknown check problem: " + problem);
  }
  res["agree"] = agree;
  res["status"] = agree ? "ok" : "mismatch";
  res["timing_ms"] = timer.ms();
  write_doc(res, out);
  return agree ? 0 : 1;
}

int run_gen(const std::string& out, const std::string& kind, int n,
            std::uint64_t seed, int m, long long wmax, long long hmax,
            long long bound_cap) {
  Json doc;
  if (kind == "tree") doc = tree_to_json(gen_tree(n, seed));
  else if (kind == "bounded-dag")
    doc = dag_to_json(gen_bounded_dag(n, seed, bound_cap));
  else if (kind == "weighted-graph")
    doc = graph_to_json(gen_weighted_graph(n, m, wmax, seed));
  else if (kind == "leaf-seq") doc = leafseq_to_json(gen_leaf_seq(n, hmax, seed));
  else throw InputError("unknown generator kind: " + kind);
  write_doc(doc, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact optimization and counting on trees and DAGs"};
  app.require_subcommand(1);

  std::string in, out;
  app.add_option("-i,--input", in, "input document (default: stdin)")
      ->capture_default_str();
  app.add_option("-o,--output", out, "output document (default: stdout)")
      ->capture_default_str();

  std::function<int()> action;

  {
    auto* sc = app.add_subcommand("cycle-complete",
                                  "minimum-weight disjoint cycle completion");
    auto mode = std::make_shared<std::string>("fast");
    sc->add_flag_callback("--fast", [mode] { *mode = "fast"; });
    sc->add_flag_callback("--quadratic", [mode] { *mode = "quadratic"; });
    sc->add_flag_callback("--greedy-unit", [mode] { *mode = "greedy-unit"; });
    sc->add_flag_callback("--minimax", [mode] { *mode = "minimax"; });
    sc->callback([&, mode] {
      action = [&, mode] { return run_cycle_complete(in, out, *mode); };
    });
  }
  {
    auto* sc = app.add_subcommand("partition-bounded",
                                  "size-bounded tree partitioning");
    auto q = std::make_shared<long long>(0);
    sc->add_option("--Q", *q, "lower size bound");
    sc->callback([&, q] {
      action = [&, q] { return run_partition_bounded(in, out, *q); };
    });
  }
  app.add_subcommand("partition-connected",
                     "min-cost extraction of k connected parts")
      ->callback([&] { action = [&] { return run_partition_connected(in, out); }; });
  app.add_subcommand("min-streams", "fewest unicast streams, then min cost")
      ->callback([&] { action = [&] { return run_min_streams(in, out); }; });
  app.add_subcommand("path-cover", "minimum path cover of a DAG")
      ->callback([&] { action = [&] { return run_path_cover(in, out); }; });
  {
    auto* sc = app.add_subcommand("dcmst",
                                  "min spanning tree with degree k at r");
    auto r = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    sc->add_option("--r", *r, "constrained vertex");
    sc->add_option("--k", *k, "required degree");
    sc->callback([&, r, k] {
      action = [&, r, k] { return run_dcmst(in, out, *r, *k); };
    });
  }
  app.add_subcommand("match-extended",
                     "max-weight matching in the extended tree")
      ->callback([&] { action = [&] { return run_match_extended(in, out); }; });
  {
    auto* sc = app.add_subcommand("match-power",
                                  "maximum matching in the k-th tree power");
    auto k = std::make_shared<int>(2);
    sc->add_option("--k", *k, "power (>= 2)");
    sc->callback([&, k] {
      action = [&, k] { return run_match_power(in, out, *k); };
    });
  }
  app.add_subcommand("grundy", "worst-case first-fit colors for every vertex")
      ->callback([&] { action = [&] { return run_grundy(in, out); }; });
  {
    auto* sc = app.add_subcommand("build-min-height",
                                  "min-height tree over an ordered leaf seq");
    auto method = std::make_shared<std::string>("linear");
    sc->add_flag_callback("--linear", [method] { *method = "linear"; });
    sc->add_flag_callback("--mergesim", [method] { *method = "mergesim"; });
    sc->add_flag_callback("--dp", [method] { *method = "dp"; });
    sc->callback([&, method] {
      action = [&, method] { return run_build(in, out, *method); };
    });
  }
  {
    auto* sc = app.add_subcommand("count-labeled-leaves",
                                  "labeled trees with exactly p leaves");
    auto n = std::make_shared<int>(0);
    auto p = std::make_shared<int>(0);
    sc->add_option("--n", *n, "vertex count")->required();
    sc->add_option("--p", *p, "leaf count")->required();
    sc->callback([&, n, p] {
      action = [&, n, p] { return run_count_labeled(out, *n, *p); };
    });
  }
  {
    auto* sc = app.add_subcommand("count-constrained",
                                  "unlabeled rooted trees under a degree/son set");
    auto slow = std::make_shared<bool>(false);
    sc->add_flag("--slow", *slow, "partition-enumeration cross-check");
    sc->callback([&, slow] {
      action = [&, slow] { return run_count_constrained(in, out, *slow); };
    });
  }
  {
    auto* sc = app.add_subcommand("oracle", "exhaustive reference solvers");
    auto name = std::make_shared<std::string>();
    sc->add_option("name", *name, "oracle name")->required();
    sc->callback([&, name] {
      action = [&, name] { return run_oracle(in, out, *name); };
    });
  }
  {
    auto* sc = app.add_subcommand("check",
                                  "compare an algorithm against its oracle");
    auto problem = std::make_shared<std::string>();
    sc->add_option("--problem", *problem, "problem name")->required();
    sc->callback([&, problem] {
      action = [&, problem] { return run_check(in, out, *problem); };
    });
  }
  {
    auto* sc = app.add_subcommand("gen", "seeded instance generators");
    auto kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(10);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto m = std::make_shared<int>(0);
    auto wmax = std::make_shared<long long>(10);
    auto hmax = std::make_shared<long long>(4);
    auto cap = std::make_shared<long long>(2);
    sc->add_option("kind", *kind,
                   "tree | bounded-dag | weighted-graph | leaf-seq")
        ->required();
    sc->add_option("--n", *n, "size");
    sc->add_option("--seed", *seed, "RNG seed");
    sc->add_option("--m", *m, "extra edges (weighted-graph)");
    sc->add_option("--wmax", *wmax, "max edge weight (weighted-graph)");
    sc->add_option("--hmax", *hmax, "max leaf height (leaf-seq)");
    sc->add_option("--bound-cap", *cap, "max bound value (bounded-dag)");
    sc->callback([&, kind, n, seed, m, wmax, hmax, cap] {
      action = [&, kind, n, seed, m, wmax, hmax, cap] {
        return run_gen(out, *kind, *n, *seed, *m, *wmax, *hmax, *cap);
      };
    });
  }

  for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
  } catch (const ContractError& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
