#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "treeopt/coloring.hpp"
#include "treeopt/gen.hpp"
#include "treeopt/oracles.hpp"
#include "treeopt/tree_core.hpp"

using namespace treeopt;
using testutil::adjacency;
using testutil::make_tree;
using testutil::path_tree;
using testutil::pick;

// B(k): root 1 with subtrees B(0)..B(k-1); 2^k vertices.
static RootedTree binomial_tree(int k) {
  int n = 1 << k;
  std::vector<int> parent(n + 1, 0);
  // B(k) = B(k-1) plus a shifted copy whose root hangs off vertex 1.
  for (int half = 1; half < n; half *= 2) {
    parent[half + 1] = 1;
    for (int v = 2; v <= half; ++v) parent[half + v] = half + parent[v];
  }
  return from_parents(n, parent, 1);
}

TEST_CASE("first fit examples") {
  std::vector<int> c2 = first_fit_color(adjacency(path_tree(2)), {1, 2});
  CHECK(c2[1] == 1);
  CHECK(c2[2] == 2);

  std::vector<int> c3 = first_fit_color(adjacency(path_tree(3)), {1, 3, 2});
  CHECK(c3[1] == 1);
  CHECK(c3[3] == 1);
  CHECK(c3[2] == 2);

  std::mt19937_64 rng(1);
  for (int it = 0; it < 20; ++it) {
    int n = static_cast<int>(pick(rng, 1, 40));
    RootedTree t = gen_tree(n, rng());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> col = first_fit_color(adjacency(t), order);
    CHECK(std::count(col.begin() + 1, col.end(), 1) >= 1);
  }
}

TEST_CASE("first fit rejects invalid orders") {
  auto adj = adjacency(path_tree(3));
  CHECK_THROWS_AS(first_fit_color(adj, {1, 2}), InputError);
  CHECK_THROWS_AS(first_fit_color(adj, {1, 2, 2}), InputError);
  CHECK_THROWS_AS(first_fit_color(adj, {1, 2, 4}), InputError);
}

TEST_CASE("grundy examples") {
  CHECK(grundy_all(path_tree(1)).grundy == 1);
  CHECK(grundy_all(path_tree(4)).grundy == 3);
  CHECK(grundy_all(binomial_tree(3)).grundy == 4);
}

TEST_CASE("grundy equals the all-orderings oracle on free trees up to n=8") {
  for (int n = 1; n <= 8; ++n) {
    for (const std::vector<int>& parent : testutil::free_trees(n)) {
      RootedTree t = from_parents(n, parent, 1);
      GrundyResult g = grundy_all(t);
      int want = brute_grundy(adjacency(t));
      REQUIRE(g.grundy == want);
    }
  }
}

TEST_CASE("grundy is labeling- and rooting-invariant (random relabelings)") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(pick(rng, 1, 8));
    RootedTree t = gen_tree(n, rng());
    int root = static_cast<int>(pick(rng, 1, n));
    std::vector<TreeEdge> edges;
    for (int v = 1; v <= n; ++v)
      if (v != t.root) edges.push_back({t.parent[v], v, 1});
    RootedTree rerooted = root_at(n, edges, root, false);
    REQUIRE(grundy_all(rerooted).grundy == brute_grundy(adjacency(rerooted)));
  }
}

TEST_CASE("cmax equals the per-vertex re-rooted bottom-up pass") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 500; ++it) {
    int n = static_cast<int>(pick(rng, 1, 150));
    RootedTree t = gen_tree(n, rng());
    GrundyResult g = grundy_all(t);
    std::vector<TreeEdge> edges;
    for (int v = 1; v <= n; ++v)
      if (v != t.root) edges.push_back({t.parent[v], v, 1});
    for (int i = 1; i <= n; ++i) {
      RootedTree ti = root_at(n, edges, i, false);
      REQUIRE(g.cmax[i] == grundy_all(ti).c1[i]);
    }
  }
}

TEST_CASE("color bounds hold on random trees") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 300; ++it) {
    int n = static_cast<int>(pick(rng, 1, 400));
    RootedTree t = gen_tree(n, rng());
    GrundyResult g = grundy_all(t);
    int kmax = 1;
    while ((1 << kmax) <= n) ++kmax;
    REQUIRE(g.grundy <= kmax);
    int top = 0;
    for (int v = 1; v <= n; ++v) {
      REQUIRE(g.c1[v] >= 1);
      REQUIRE(g.c1[v] <= g.cmax[v]);
      REQUIRE(g.cmax[v] <= kmax);
      top = std::max(top, g.cmax[v]);
    }
    REQUIRE(top == g.grundy);
  }
}

TEST_CASE("binomial trees meet the 2^(q-1) bound") {
  for (int q = 1; q <= 12; ++q)
    CHECK(grundy_all(binomial_tree(q - 1)).grundy == q);
}
