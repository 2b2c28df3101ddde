#include "tautcert/lp.hpp"

#include <algorithm>

#include "tautcert/error.hpp"

namespace tautcert {

namespace {

// Dense tableau: rows 0..m-1 are constraints, row m is the reduced-cost
// row; column n is the right-hand side. basis[i] is the variable basic in
// row i.
struct Tableau {
  RatMat T;
  std::vector<int> basis;
  int m, n;

  void pivot(int row, int col) {
    Rat inv = Rat(1) / T[row][col];
    for (int j = 0; j <= n; ++j) T[row][j] *= inv;
    for (int i = 0; i <= m; ++i) {
      if (i == row || T[i][col] == 0) continue;
      Rat f = T[i][col];
      for (int j = 0; j <= n; ++j) T[i][j] -= f * T[row][j];
    }
    basis[row] = col;
  }

  // Bland: entering = lowest-index negative reduced cost; leaving = lowest
  // basic variable among minimal ratios.
  LpStatus run() {
    for (;;) {
      int col = -1;
      for (int j = 0; j < n; ++j)
        if (T[m][j] < 0) {
          col = j;
          break;
        }
      if (col < 0) return LpStatus::optimal;
      int row = -1;
      Rat best = 0;
      for (int i = 0; i < m; ++i) {
        if (T[i][col] <= 0) continue;
        Rat ratio = T[i][n] / T[i][col];
        if (row < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0) return LpStatus::unbounded;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult lp_minimize(const RatMat& A, const RatVec& b, const RatVec& c) {
  int m = static_cast<int>(A.size());
  int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());
  if (static_cast<int>(c.size()) != n)
    fail(ErrorCode::bad_argument, "objective length does not match columns");

  // Phase 1: artificial variable per row, minimizing their sum.
  Tableau t;
  t.m = m;
  t.n = n + m;
  t.T.assign(m + 1, RatVec(t.n + 1, 0));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    Rat sign = (b[i] < 0) ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) t.T[i][j] = sign * A[i][j];
    t.T[i][n + i] = 1;
    t.T[i][t.n] = sign * b[i];
    t.basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += t.T[i][j];
    t.T[m][j] = -s;
  }
  Rat rhs_sum = 0;
  for (int i = 0; i < m; ++i) rhs_sum += t.T[i][t.n];
  t.T[m][t.n] = -rhs_sum;

  t.run();  // phase 1 is never unbounded
  if (t.T[m][t.n] != 0) return {LpStatus::infeasible, 0, {}};

  // Drive remaining artificials out of the basis; rows with no original
  // coefficient are redundant and get zeroed.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (t.T[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) t.pivot(i, col);
  }

  // Phase 2: restrict to original columns, rebuild reduced costs from c.
  Tableau t2;
  t2.m = m;
  t2.n = n;
  t2.T.assign(m + 1, RatVec(n + 1, 0));
  t2.basis = t.basis;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t2.T[i][j] = t.T[i][j];
    t2.T[i][n] = t.T[i][t.n];
  }
  for (int j = 0; j < n; ++j) t2.T[m][j] = c[j];
  for (int i = 0; i < m; ++i) {
    if (t2.basis[i] >= n) continue;  // redundant row, artificial stuck at 0
    Rat f = t2.T[m][t2.basis[i]];
    if (f == 0) continue;
    for (int j = 0; j <= n; ++j) t2.T[m][j] -= f * t2.T[i][j];
  }

  LpStatus status = t2.run();
  if (status == LpStatus::unbounded) return {LpStatus::unbounded, 0, {}};

  LpResult out;
  out.status = LpStatus::optimal;
  out.x.assign(n, 0);
  for (int i = 0; i < m; ++i)
    if (t2.basis[i] < n) out.x[t2.basis[i]] = t2.T[i][n];
  out.value = -t2.T[m][n];
  return out;
}

LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c) {
  RatVec neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  LpResult r = lp_minimize(A, b, neg);
  r.value = -r.value;
  return r;
}

bool lp_feasible(const RatMat& A, const RatVec& b) {
  int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  RatVec c(n, 0);
  return lp_minimize(A, b, c).status == LpStatus::optimal;
}

}  // namespace tautcert
