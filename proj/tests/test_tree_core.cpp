#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "treeopt/gen.hpp"
#include "treeopt/tree_core.hpp"

using namespace treeopt;
using testutil::make_tree;
using testutil::path_tree;
using testutil::pick;

TEST_CASE("root_at on a path") {
  RootedTree t = path_tree(3);
  CHECK(t.parent[2] == 1);
  CHECK(t.parent[3] == 2);
  CHECK(t.parent[1] == 0);
}

TEST_CASE("root_at at an interior vertex") {
  RootedTree t = path_tree(3, 2);
  REQUIRE(t.children[2].size() == 2);
  CHECK(t.children[2][0] == 1);
  CHECK(t.children[2][1] == 3);
}

TEST_CASE("root_at rejects duplicate edges") {
  std::vector<TreeEdge> edges{{1, 2, 1}, {1, 3, 1}, {3, 4, 1}, {1, 2, 1}};
  CHECK_THROWS_AS(root_at(4, edges, 1), InputError);
}

TEST_CASE("root_at rejects disconnected input") {
  std::vector<TreeEdge> edges{{1, 2, 1}, {3, 4, 1}, {3, 4, 1}};
  CHECK_THROWS_AS(root_at(4, edges, 1), InputError);
}

TEST_CASE("dfs numbering examples") {
  DfsNumbering d = dfs_numbering(path_tree(3));
  CHECK(d.num == std::vector<int>{0, 1, 2, 3});
  CHECK(d.max_num == std::vector<int>{0, 3, 3, 3});

  DfsNumbering single = dfs_numbering(path_tree(1));
  CHECK(single.num[1] == 1);
  CHECK(single.max_num[1] == 1);

  RootedTree star = make_tree(3, {{1, 2}, {1, 3}});
  DfsNumbering s = dfs_numbering(star);
  CHECK(s.num == std::vector<int>{0, 1, 2, 3});
  CHECK(s.max_num[1] == 3);
  CHECK(s.max_num[2] == 2);
}

static std::vector<int> subtree_sizes(const RootedTree& t) {
  std::vector<int> size(t.n + 1, 1);
  std::vector<int> po = t.postorder();
  for (int v : po)
    if (v != t.root) size[t.parent[v]] += size[v];
  return size;
}

TEST_CASE("dfs ranges cover exactly the subtree") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 1000; ++it) {
    int n = static_cast<int>(pick(rng, 1, 200));
    RootedTree t = gen_tree(n, rng());
    DfsNumbering d = dfs_numbering(t);
    std::vector<int> size = subtree_sizes(t);
    std::vector<char> used(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
      REQUIRE(d.num[v] >= 1);
      REQUIRE(d.num[v] <= n);
      CHECK(!used[d.num[v]]);
      used[d.num[v]] = 1;
      CHECK(d.max_num[v] - d.num[v] + 1 == size[v]);
    }
  }
}

TEST_CASE("lca examples") {
  LcaIndex p3(path_tree(3));
  CHECK(p3.lca(3, 3) == 3);
  LcaIndex star(make_tree(3, {{1, 2}, {1, 3}}));
  CHECK(star.lca(2, 3) == 1);
  LcaIndex t(make_tree(5, {{1, 2}, {2, 3}, {2, 4}, {1, 5}}));
  CHECK(t.lca(3, 4) == 2);
  CHECK(t.lca(4, 5) == 1);
}

TEST_CASE("lca rejects out-of-range vertices") {
  LcaIndex idx(path_tree(3));
  CHECK_THROWS_AS(idx.lca(0, 2), InputError);
  CHECK_THROWS_AS(idx.lca(1, 4), InputError);
}

TEST_CASE("lca equals the walk-up oracle on random trees") {
  std::mt19937_64 rng(202);
  for (int it = 0; it < 1000; ++it) {
    int n = static_cast<int>(pick(rng, 1, 200));
    RootedTree t = gen_tree(n, rng());
    LcaIndex idx(t);
    std::vector<int> depth = t.depths();
    for (int u = 1; u <= n; ++u)
      for (int v = u; v <= n; ++v) {
        int a = u, b = v;
        while (a != b) {
          if (depth[a] < depth[b]) std::swap(a, b);
          a = t.parent[a];
        }
        REQUIRE(idx.lca(u, v) == a);
      }
  }
}

TEST_CASE("segment tree examples") {
  AddSegTree s(4);
  s.range_add(1, 4, 5);
  CHECK(s.point_query(3) == 5);

  AddSegTree s2(4);
  s2.range_add(1, 2, 1);
  s2.range_add(2, 3, 2);
  CHECK(s2.point_query(2) == 3);
  CHECK(s2.point_query(1) == 1);
  CHECK(s2.point_query(4) == 0);

  AddSegTree s3(5);
  for (int i = 1; i <= 5; ++i) CHECK(s3.point_query(i) == 0);
}

TEST_CASE("segment tree rejects bad intervals") {
  AddSegTree s(4);
  CHECK_THROWS_AS(s.range_add(3, 2, 1), InputError);
  CHECK_THROWS_AS(s.range_add(0, 2, 1), InputError);
  CHECK_THROWS_AS(s.range_add(1, 5, 1), InputError);
}

TEST_CASE("segment tree matches a plain-array simulation") {
  std::mt19937_64 rng(303);
  int n = 37;
  AddSegTree s(n);
  std::vector<long long> plain(n + 1, 0);
  for (int op = 0; op < 10000; ++op) {
    int kind = static_cast<int>(rng() % 3);
    if (kind == 0) {
      int l = static_cast<int>(pick(rng, 1, n));
      int r = static_cast<int>(pick(rng, l, n));
      long long d = pick(rng, -50, 50);
      s.range_add(l, r, d);
      for (int i = l; i <= r; ++i) plain[i] += d;
    } else if (kind == 1) {
      int i = static_cast<int>(pick(rng, 1, n));
      long long v = pick(rng, -100, 100);
      s.point_set(i, v);
      plain[i] = v;
    } else {
      int i = static_cast<int>(pick(rng, 1, n));
      REQUIRE(s.point_query(i) == plain[i]);
    }
  }
  for (int i = 1; i <= n; ++i) CHECK(s.point_query(i) == plain[i]);
}

TEST_CASE("active leaf trees: rank/unrank and next_active") {
  ActiveLeafTrees t(4);
  CHECK(t.rank(3) == 2);
  CHECK(t.unrank(2) == 3);
  t.deactivate(2);
  CHECK(t.next_active(1) == 3);
  t.deactivate(1);
  t.deactivate(4);
  CHECK(t.next_active(3) == 0);
}

TEST_CASE("rank/unrank inverses hold throughout random deactivation") {
  std::mt19937_64 rng(404);
  for (int it = 0; it < 50; ++it) {
    int n = static_cast<int>(pick(rng, 2, 80));
    ActiveLeafTrees t(n);
    std::vector<int> alive;
    for (int i = 1; i <= n; ++i) alive.push_back(i);
    for (int step = 0; step < n - 1; ++step) {
      size_t kill = static_cast<size_t>(pick(rng, 0, alive.size() - 1));
      t.deactivate(alive[kill]);
      alive.erase(alive.begin() + static_cast<long>(kill));
      REQUIRE(t.nactive_root() == static_cast<long long>(alive.size()));
      for (size_t r = 0; r < alive.size(); ++r) {
        REQUIRE(t.unrank(static_cast<long long>(r)) == alive[r]);
        REQUIRE(t.rank(alive[r]) == static_cast<int>(r));
        int expect_next = r + 1 < alive.size() ? alive[r + 1] : 0;
        REQUIRE(t.next_active(alive[r]) == expect_next);
      }
    }
  }
}

TEST_CASE("min_hc tracks the leftmost minimum") {
  ActiveLeafTrees t(5);
  t.set_hc(1, 7);
  t.set_hc(2, 3);
  t.set_hc(3, 3);
  t.set_hc(4, 9);
  auto [hc, lnum] = t.min_hc();
  CHECK(hc == 3);
  CHECK(lnum == 2);
  t.set_hc(2, ActiveLeafTrees::kInf);
  auto [hc2, lnum2] = t.min_hc();
  CHECK(hc2 == 3);
  CHECK(lnum2 == 3);
}
