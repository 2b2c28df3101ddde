#include "tautcert/linalg.hpp"

#include <algorithm>

#include "tautcert/error.hpp"

namespace tautcert {

IntMat identity_matrix(int n) {
  IntMat I(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMat int_mat_mul(const IntMat& A, const IntMat& B) {
  int n = static_cast<int>(A.size());
  int k = n ? static_cast<int>(A[0].size()) : 0;
  int m = B.empty() ? 0 : static_cast<int>(B[0].size());
  IntMat C(n, IntVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

IntVec int_mat_vec(const IntMat& A, const IntVec& x) {
  IntVec y(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
  return y;
}

namespace {

// Floor division quotient, so that a - q*b has remainder in [0, |b|).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

struct SmithWork {
  IntMat A, U, V;
  int rows, cols;

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : A) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  }
  void add_row(int dst, int src, const Int& k) {  // row_dst += k * row_src
    for (int j = 0; j < cols; ++j) A[dst][j] += k * A[src][j];
    for (int j = 0; j < rows; ++j) U[dst][j] += k * U[src][j];
  }
  void add_col(int dst, int src, const Int& k) {  // col_dst += k * col_src
    for (int i = 0; i < rows; ++i) A[i][dst] += k * A[i][src];
    for (std::size_t i = 0; i < V.size(); ++i) V[i][dst] += k * V[i][src];
  }
  void negate_row(int i) {
    for (auto& x : A[i]) x = -x;
    for (auto& x : U[i]) x = -x;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& A_in) {
  int rows = static_cast<int>(A_in.size());
  int cols = rows ? static_cast<int>(A_in[0].size()) : 0;
  SmithWork w{A_in, identity_matrix(rows), identity_matrix(cols), rows, cols};

  int t = 0;
  int limit = std::min(rows, cols);
  while (t < limit) {
    // Pivot: nonzero entry of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (w.A[i][j] == 0) continue;
        Int a = int_abs(w.A[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.A[i][t] == 0) continue;
        Int q = floor_div(w.A[i][t], w.A[t][t]);
        w.add_row(i, t, -q);
        if (w.A[i][t] != 0) {
          w.swap_rows(t, i);  // strictly smaller pivot
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.A[t][j] == 0) continue;
        Int q = floor_div(w.A[t][j], w.A[t][t]);
        w.add_col(j, t, -q);
        if (w.A[t][j] != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot divides every entry of the trailing block, or absorb an
      // offending row and restart the reduction.
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (w.A[i][j] % w.A[t][t] != 0) {
            w.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }

    if (w.A[t][t] < 0) w.negate_row(t);
    ++t;
  }

  SmithResult out;
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  out.rank = t;
  out.diag.resize(limit, 0);
  for (int i = 0; i < limit; ++i) out.diag[i] = w.A[i][i];
  return out;
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  SmithResult s = smith_normal_form(A);
  IntVec ub = int_mat_vec(s.U, b);
  IntVec y(cols, 0);
  for (int i = 0; i < rows; ++i) {
    Int d = (i < static_cast<int>(s.diag.size())) ? s.diag[i] : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      if (i < cols) y[i] = ub[i] / d;
    }
  }
  return int_mat_vec(s.V, y);
}

namespace {

// Row-reduces A (augmented with b when given); returns pivot columns.
std::vector<int> gauss(RatMat& A, RatVec* b) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[r], A[p]);
    if (b) std::swap((*b)[r], (*b)[p]);
    Rat inv = Rat(1) / A[r][c];
    for (int j = c; j < cols; ++j) A[r][j] *= inv;
    if (b) (*b)[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rational_rank(RatMat A) {
  return static_cast<int>(gauss(A, nullptr).size());
}

std::optional<RatVec> solve_rational(RatMat A, RatVec b) {
  int cols = A.empty() ? 0 : static_cast<int>(A[0].size());
  std::vector<int> pivots = gauss(A, &b);
  for (std::size_t i = pivots.size(); i < A.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  RatVec x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::vector<RatVec> rational_nullspace(RatMat A) {
  int cols = A.empty() ? 0 : static_cast<int>(A[0].size());
  std::vector<int> pivots = gauss(A, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tautcert
