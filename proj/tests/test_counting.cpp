#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "treeopt/counting.hpp"
#include "treeopt/oracles.hpp"
#include "treeopt/tree_core.hpp"

using namespace treeopt;
using testutil::pick;

TEST_CASE("binomial table examples") {
  auto c = binomial_table(10);
  CHECK(c[4][2] == 6);
  for (int i = 0; i <= 10; ++i) CHECK(c[i][0] == 1);
  BigNat row = 0;
  for (int j = 0; j <= 10; ++j) row += c[10][j];
  CHECK(row == 1024);
}

TEST_CASE("surjection examples") {
  CHECK(surjections(0, 0) == 1);
  CHECK(surjections(3, 2) == 6);
  CHECK(surjections(2, 3) == 0);
  BigNat fact = 1;
  for (int j = 1; j <= 8; ++j) {
    fact *= j;
    CHECK(surjections(j, j) == fact);
  }
}

TEST_CASE("surjections equal direct function enumeration") {
  for (int j = 0; j <= 7; ++j)
    for (int k = 0; k <= 7; ++k) {
      long count;
      if (k == 0) {
        count = j == 0 ? 1 : 0;
      } else {
        count = 0;
        long long total = 1;
        for (int i = 0; i < j; ++i) total *= k;
        for (long long code = 0; code < total; ++code) {
          long long c = code;
          int hit = 0;
          for (int i = 0; i < j; ++i) {
            hit |= 1 << (c % k);
            c /= k;
          }
          if (hit == (1 << k) - 1) ++count;
        }
      }
      CHECK(surjections(j, k) == count);
    }
}

TEST_CASE("labeled leaf-count examples") {
  CHECK(labeled_trees_with_leaves(3, 2) == 3);
  CHECK(labeled_trees_with_leaves(4, 2) == 12);
  CHECK(labeled_trees_with_leaves(4, 3) == 4);
  CHECK(labeled_trees_with_leaves(1, 1) == 1);
  CHECK(labeled_trees_with_leaves(2, 2) == 1);
}

TEST_CASE("labeled counts match the Pruefer enumeration histogram") {
  for (int n = 2; n <= 9; ++n) {
    std::map<int, long> hist;
    enumerate_labeled_trees(
        n, [&](const std::vector<std::pair<int, int>>& edges) {
          std::vector<int> deg(n + 1, 0);
          for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
          }
          int leaves = 0;
          for (int v = 1; v <= n; ++v) leaves += deg[v] == 1;
          ++hist[leaves];
        });
    BigNat total = 0;
    for (int p = 1; p <= n; ++p) {
      BigNat got = labeled_trees_with_leaves(n, p);
      CHECK(got == (hist.count(p) ? hist[p] : 0));
      total += got;
    }
    BigNat cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    CHECK(total == cayley);
  }
}

TEST_CASE("combinations with repetition") {
  CHECK(cr(3, 2) == 6);
  CHECK(cr(7, 0) == 1);
  CHECK(cr(1, 9) == 1);
  CHECK(cr(0, 3) == 0);
  auto c = binomial_table(30);
  for (int i = 1; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) CHECK(cr(i, j) == c[i + j - 1][j]);
}

static ConstraintSet sons_set(std::set<int> s) {
  ConstraintSet cs;
  cs.s = std::move(s);
  cs.mode = ConstraintMode::kSons;
  return cs;
}

static ConstraintSet degree_set(std::set<int> s) {
  ConstraintSet cs;
  cs.s = std::move(s);
  cs.mode = ConstraintMode::kDegree;
  return cs;
}

TEST_CASE("unlabeled constrained examples") {
  std::set<int> all;
  std::vector<long> want{1, 1, 2, 4, 9, 20};
  for (int n = 1; n <= 6; ++n) {
    for (int x = 0; x < n; ++x) all.insert(x);
    CHECK(unlabeled_constrained(n, sons_set(all)) == want[n - 1]);
  }
  CHECK(unlabeled_constrained(3, sons_set({0, 2})) == 1);
  CHECK(unlabeled_constrained(5, sons_set({0, 2})) == 1);
  CHECK(unlabeled_constrained(7, sons_set({0, 2})) == 2);
  CHECK(unlabeled_constrained(4, sons_set({0, 2})) == 0);

  CHECK(unlabeled_constrained(1, sons_set({0, 1})) == 1);
  CHECK(unlabeled_constrained(1, sons_set({1, 2})) == 0);
  CHECK(unlabeled_constrained(1, degree_set({0})) == 1);
  CHECK(unlabeled_constrained(1, degree_set({1, 2})) == 0);
}

TEST_CASE("slow method examples") {
  for (int n = 1; n <= 12; ++n)
    CHECK(unlabeled_constrained_slow(n, sons_set({0, 1})) == 1);
  CHECK(unlabeled_constrained_slow(2, sons_set({0, 1})) == 1);
  CHECK_THROWS_AS(unlabeled_constrained_slow(23, sons_set({0, 1})),
                  ResourceLimitError);
}

static long enumerate_constrained(int n, const ConstraintSet& cs) {
  long count = 0;
  enumerate_unlabeled_rooted(n, [&](const std::vector<int>& parent) {
    std::vector<int> sons(n + 1, 0);
    for (int v = 2; v <= n; ++v) ++sons[parent[v]];
    for (int v = 1; v <= n; ++v) {
      int key = sons[v] + (cs.mode == ConstraintMode::kDegree && v != 1);
      if (!cs.s.count(key)) return;
    }
    ++count;
  });
  return count;
}

TEST_CASE("fast, slow and the canonical enumerator agree") {
  std::mt19937_64 rng(858);
  std::vector<ConstraintSet> sets;
  std::set<int> all;
  for (int x = 0; x < 14; ++x) all.insert(x);
  sets.push_back(sons_set(all));
  sets.push_back(sons_set({0, 2}));
  sets.push_back(sons_set({0, 1, 2}));
  sets.push_back(sons_set({0, 3}));
  sets.push_back(degree_set({1, 2, 3}));
  sets.push_back(degree_set({1, 3}));
  sets.push_back(degree_set({1, 2}));
  for (int it = 0; it < 50; ++it) {
    bool degree = rng() % 2 == 0;
    std::set<int> s;
    if (degree) s.insert(1);
    else {
      s.insert(0);
      s.insert(1);
    }
    for (int x = 0; x < 14; ++x)
      if (rng() % 2) s.insert(x);
    sets.push_back(degree ? degree_set(s) : sons_set(s));
  }
  for (const ConstraintSet& cs : sets)
    for (int n = 1; n <= 14; ++n) {
      BigNat fast = unlabeled_constrained(n, cs);
      BigNat slow = unlabeled_constrained_slow(n, cs);
      long enumerated = enumerate_constrained(n, cs);
      REQUIRE(fast == slow);
      REQUIRE(fast == enumerated);
    }
}
