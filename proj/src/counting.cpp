#include "treeopt/counting.hpp"

#include <algorithm>
#include <functional>

namespace treeopt {

namespace {

void validate_constraints(const ConstraintSet& cs) {
  if (cs.s.empty()) throw InputError("constraint set must be nonempty");
  for (int x : cs.s)
    if (x < 0) throw InputError("constraint set entries must be nonnegative");
}

// TT(1): the single vertex is a son, so its degree is 1 (0 sons).
BigNat tt_base(const ConstraintSet& cs) {
  int need = cs.mode == ConstraintMode::kDegree ? 1 : 0;
  return cs.s.count(need) ? 1 : 0;
}

}  // namespace

std::vector<std::vector<BigNat>> binomial_table(int nmax) {
  if (nmax < 0) throw InputError("binomial table size must be nonnegative");
  std::vector<std::vector<BigNat>> c(nmax + 1);
  for (int i = 0; i <= nmax; ++i) {
    c[i].assign(i + 1, 0);
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  return c;
}

BigNat surjections(int j, int k) {
  if (j < 0 || k < 0) throw InputError("surjections needs j, k >= 0");
  auto c = binomial_table(j);
  // nf[a][b] = NF(a, b) for b <= k
  std::vector<std::vector<BigNat>> nf(j + 1, std::vector<BigNat>(k + 1, 0));
  nf[0][0] = 1;
  for (int b = 1; b <= k; ++b)
    for (int a = b; a <= j; ++a)
      for (int g = 1; g <= a; ++g)
        if (a - g >= b - 1) nf[a][b] += c[a][g] * nf[a - g][b - 1];
  return nf[j][k];
}

BigNat labeled_trees_with_leaves(int n, int p) {
  if (n < 1 || p < 1 || p > n)
    throw InputError("labeled tree count needs 1 <= p <= n");
  auto c = binomial_table(n);
  // pw[m][e] = m^e
  std::vector<std::vector<BigNat>> pw(n + 1, std::vector<BigNat>(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    pw[m][0] = 1;
    for (int e = 1; e <= n; ++e) pw[m][e] = pw[m][e - 1] * m;
  }

  // Strip the j leaves from a tree with i vertices; the j removed leaves map
  // to the m = i-j remaining vertices so that every leaf of the reduced tree
  // is hit (internal vertices may be hit too).  By inclusion-exclusion over
  // t missed reduced leaves, with a[m][t] = Σ_k NT(m,k)·C(k,t) aggregated
  // once per row m, each NT(i,j) entry costs O(m).
  std::vector<std::vector<BigNat>> nt(n + 1, std::vector<BigNat>(n + 1, 0));
  std::vector<std::vector<BigNat>> a(n + 1, std::vector<BigNat>(n + 1, 0));
  auto fill_a = [&](int m) {
    for (int t = 0; t <= m; ++t)
      for (int k = std::max(t, 1); k <= m; ++k)
        a[m][t] += nt[m][k] * c[k][t];
  };
  nt[1][1] = 1;
  fill_a(1);
  if (n >= 2) {
    nt[2][2] = 1;
    fill_a(2);
  }
  for (int i = 3; i <= n; ++i) {
    for (int j = 1; j <= i - 1; ++j) {
      int m = i - j;
      mpz_class sum = 0;  // signed intermediate; final value is nonnegative
      for (int t = 0; t <= m - 1; ++t) {
        mpz_class term = pw[m - t][j] * a[m][t];
        if (t % 2 == 0) sum += term;
        else sum -= term;
      }
      nt[i][j] = c[i][j] * sum;
    }
    if (i < n) fill_a(i);
  }
  return nt[n][p];
}

BigNat cr(const BigNat& i, int j) {
  if (j < 0) throw InputError("cr needs j >= 0");
  // CR(i,j) = C(i+j-1, j), built up one factor at a time; every intermediate
  // division is exact.
  BigNat m = i + j - 1;
  BigNat res = 1;
  for (int t = 1; t <= j; ++t) {
    res *= m - t + 1;
    if (!mpz_divisible_ui_p(res.get_mpz_t(), static_cast<unsigned long>(t)))
      throw ContractError("cr stepwise division left a remainder");
    mpz_divexact_ui(res.get_mpz_t(), res.get_mpz_t(),
                    static_cast<unsigned long>(t));
  }
  return res;
}

BigNat unlabeled_constrained(int n, const ConstraintSet& cs) {
  validate_constraints(cs);
  if (n < 1) throw InputError("tree size must be positive");
  if (n == 1) return cs.s.count(0) ? 1 : 0;
  bool deg = cs.mode == ConstraintMode::kDegree;

  // Two rolling layers of NT(i, j, p); j ranges over 0..n-1.
  auto layer = [&] {
    return std::vector<std::vector<BigNat>>(n + 1,
                                            std::vector<BigNat>(n, 0));
  };
  std::vector<std::vector<BigNat>> prev = layer();
  prev[1][0] = 1;  // NT(1,0,0); all other p=0 entries are 0
  for (int p = 1; p <= n - 1; ++p) {
    BigNat tt = 0;
    for (int x : cs.s) {
      int rj = deg ? x - 1 : x;
      if (rj >= 0 && rj <= n - 1) tt += prev[p][rj];
    }
    int kcap = (n - 1) / p;
    std::vector<BigNat> crv(kcap + 1);
    for (int k = 0; k <= kcap; ++k) crv[k] = cr(tt, k);

    std::vector<std::vector<BigNat>> cur = layer();
    cur[1][0] = 1;
    for (int i = 2; i <= n; ++i)
      for (int j = 0; j <= n - 1; ++j) {
        BigNat v = prev[i][j];
        for (int k = 1; k <= (i - 1) / p && k <= j; ++k)
          v += prev[i - k * p][j - k] * crv[k];
        cur[i][j] = v;
      }
    prev = std::move(cur);
  }

  BigNat total = 0;
  for (int x : cs.s)
    if (x >= 0 && x <= n - 1) total += prev[n][x];
  return total;
}

BigNat unlabeled_constrained_slow(int n, const ConstraintSet& cs) {
  validate_constraints(cs);
  if (n < 1) throw InputError("tree size must be positive");
  if (n > 22)
    throw ResourceLimitError("partition enumeration is capped at n = 22");
  if (n == 1) return cs.s.count(0) ? 1 : 0;
  bool deg = cs.mode == ConstraintMode::kDegree;

  std::vector<BigNat> tok(n + 1, 0), tt(n + 1, 0);
  tok[1] = 1;
  tok[2] = cs.s.count(1) ? 1 : 0;  // the 2-vertex tree root has one son
  tt[1] = tt_base(cs);
  for (int i = 2; i <= n; ++i) {
    // nt2[x] = NT2(i, x), summed over partitions of i-1 into x parts.
    std::vector<BigNat> nt2(i, 0);
    std::function<void(int, int, int, BigNat)> gen =
        [&](int j, int rem, int parts, BigNat prod) {
          if (j == 0) {
            if (rem == 0) nt2[parts] += prod;
            return;
          }
          for (int y = 0; y * j <= rem && parts + y <= i - 1; ++y)
            gen(j - 1, rem - y * j, parts + y,
                y == 0 ? prod : prod * cr(tt[j], y));
        };
    gen(i - 1, i - 1, 0, 1);
    for (int x = 0; x <= i - 1; ++x) {
      if (nt2[x] == 0) continue;
      if (cs.s.count(x) && i > 2) tok[i] += nt2[x];
      int y = deg ? x + 1 : x;
      if (cs.s.count(y)) tt[i] += nt2[x];
    }
  }
  return tok[n];
}

}  // namespace treeopt
