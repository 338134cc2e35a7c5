#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "treeopt/gen.hpp"
#include "treeopt/matching.hpp"
#include "treeopt/oracles.hpp"
#include "treeopt/tree_core.hpp"

using namespace treeopt;
using testutil::make_tree;
using testutil::path_tree;
using testutil::pick;

static RootedTree weighted_tree(RootedTree t, const std::vector<long long>& w) {
  t.vertex_weight.assign(t.n + 1, 0);
  for (int v = 1; v <= t.n; ++v) t.vertex_weight[v] = w[v - 1];
  return t;
}

static std::vector<std::tuple<int, int, long long>> extended_edges(
    const RootedTree& t) {
  std::vector<std::tuple<int, int, long long>> edges;
  for (int v = 1; v <= t.n; ++v) {
    if (v != t.root)
      edges.emplace_back(t.parent[v], v,
                         std::llabs(t.vertex_weight[t.parent[v]] -
                                    t.vertex_weight[v]));
    const auto& sons = t.children[v];
    for (size_t i = 0; i < sons.size(); ++i)
      for (size_t j = i + 1; j < sons.size(); ++j)
        edges.emplace_back(sons[i], sons[j],
                           std::llabs(t.vertex_weight[sons[i]] -
                                      t.vertex_weight[sons[j]]));
  }
  return edges;
}

static void require_valid_extended(const RootedTree& t,
                                   const WeightedMatchingResult& r) {
  std::set<int> used;
  long long w = 0;
  for (auto [x, y] : r.edges) {
    REQUIRE(!used.count(x));
    REQUIRE(!used.count(y));
    used.insert(x);
    used.insert(y);
    bool tree_edge = t.parent[x] == y || t.parent[y] == x;
    bool siblings = x != t.root && y != t.root && t.parent[x] == t.parent[y];
    REQUIRE((tree_edge || siblings));
    w += std::llabs(t.vertex_weight[x] - t.vertex_weight[y]);
  }
  REQUIRE(w == r.weight);
}

TEST_CASE("extended matching examples") {
  RootedTree a = weighted_tree(make_tree(3, {{1, 2}, {1, 3}}), {10, 1, 2});
  WeightedMatchingResult ra = extended_tree_max_weight_matching(a);
  CHECK(ra.weight == 9);
  REQUIRE(ra.edges.size() == 1);
  CHECK(std::set<int>{ra.edges[0].first, ra.edges[0].second} ==
        std::set<int>{1, 2});
  require_valid_extended(a, ra);

  RootedTree b =
      weighted_tree(make_tree(4, {{1, 2}, {1, 3}, {1, 4}}), {0, 5, 3, 8});
  WeightedMatchingResult rb = extended_tree_max_weight_matching(b);
  CHECK(rb.weight == 10);
  require_valid_extended(b, rb);

  RootedTree single = weighted_tree(path_tree(1), {7});
  WeightedMatchingResult rs = extended_tree_max_weight_matching(single);
  CHECK(rs.weight == 0);
  CHECK(rs.edges.empty());
}

TEST_CASE("extended matching requires vertex weights") {
  CHECK_THROWS_AS(extended_tree_max_weight_matching(path_tree(3)), InputError);
}

TEST_CASE("extended matching equals the enumeration oracle") {
  std::mt19937_64 rng(474);
  for (int it = 0; it < 500; ++it) {
    int n = static_cast<int>(pick(rng, 1, 9));
    RootedTree t = gen_tree(n, rng());
    t.vertex_weight.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) t.vertex_weight[v] = pick(rng, 0, 25);
    WeightedMatchingResult got = extended_tree_max_weight_matching(t);
    long long want = brute_max_weight_matching(n, extended_edges(t));
    REQUIRE(got.weight == want);
    require_valid_extended(t, got);
  }
}

static void require_valid_power(const RootedTree& t,
                                const PowerMatchingResult& r) {
  REQUIRE(r.edges.size() == static_cast<size_t>(t.n / 2));
  std::set<int> used;
  for (auto [x, y] : r.edges) {
    REQUIRE(!used.count(x));
    REQUIRE(!used.count(y));
    used.insert(x);
    used.insert(y);
    bool d1 = t.parent[x] == y || t.parent[y] == x;
    bool d2 = (x != t.root && y != t.root && t.parent[x] == t.parent[y]) ||
              (x != t.root && t.parent[x] != t.root &&
               t.parent[t.parent[x]] == y) ||
              (y != t.root && t.parent[y] != t.root &&
               t.parent[t.parent[y]] == x);
    REQUIRE((d1 || d2));
    REQUIRE(r.matched[x]);
    REQUIRE(r.matched[y]);
  }
}

TEST_CASE("power matching examples") {
  RootedTree p4 = path_tree(4);
  PowerMatchingResult r = power_matching(p4, 2);
  require_valid_power(p4, r);

  PowerMatchingResult single = power_matching(path_tree(1), 2);
  CHECK(single.edges.empty());

  RootedTree star = make_tree(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  PowerMatchingResult rs = power_matching(star, 2);
  REQUIRE(rs.edges.size() == 2);
  for (auto [x, y] : rs.edges) {
    CHECK(x != 1);
    CHECK(y != 1);
  }
  CHECK_FALSE(rs.matched[1]);
}

TEST_CASE("power matching rejects k < 2") {
  CHECK_THROWS_AS(power_matching(path_tree(3), 1), InputError);
}

TEST_CASE("power matching is perfect up to parity on random trees") {
  std::mt19937_64 rng(585);
  for (int it = 0; it < 500; ++it) {
    int n = static_cast<int>(pick(rng, 1, 150));
    RootedTree t = gen_tree(n, rng());
    int k = static_cast<int>(pick(rng, 2, 4));
    require_valid_power(t, power_matching(t, k));
  }
}

TEST_CASE("power matching size matches the brute oracle on the square") {
  std::mt19937_64 rng(696);
  for (int it = 0; it < 120; ++it) {
    int n = static_cast<int>(pick(rng, 1, 10));
    RootedTree t = gen_tree(n, rng());
    std::vector<std::tuple<int, int, long long>> sq;
    LcaIndex idx(t);
    std::vector<int> depth = t.depths();
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        int a = idx.lca(u, v);
        if (depth[u] + depth[v] - 2 * depth[a] <= 2) sq.emplace_back(u, v, 1);
      }
    long long want = brute_max_weight_matching(n, sq);
    REQUIRE(want == n / 2);
    require_valid_power(t, power_matching(t, 2));
  }
}
