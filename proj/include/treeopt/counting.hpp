#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "treeopt/tree_core.hpp"

namespace treeopt {

using BigNat = mpz_class;

enum class ConstraintMode { kDegree, kSons };

struct ConstraintSet {
  std::set<int> s;  // subset of {0..n-1}
  ConstraintMode mode = ConstraintMode::kSons;
};

// Pascal triangle C(i,j) for 0 <= j <= i <= nmax.
std::vector<std::vector<BigNat>> binomial_table(int nmax);

// NF(j,k): surjections from a j-set onto a k-set.
BigNat surjections(int j, int k);

// NT(n,p): labeled trees on n vertices with exactly p leaves.
BigNat labeled_trees_with_leaves(int n, int p);

// CR(i,j) = C(i+j-1, j), computed in O(j) exact-division steps.
BigNat cr(const BigNat& i, int j);

// Unlabeled rooted trees on n vertices whose per-vertex degree or son count
// lies in cs.s. O(n^3 log n) time, two rolling p-layers of memory.
BigNat unlabeled_constrained(int n, const ConstraintSet& cs);

// Partition-enumeration cross-check (exponential; n <= 22).
BigNat unlabeled_constrained_slow(int n, const ConstraintSet& cs);

}  // namespace treeopt
