#include "tautcert/alexander.hpp"

#include <algorithm>
#include <functional>

#include "tautcert/error.hpp"

namespace tautcert {

LaurentPoly fox_derivative(const Word& w, int x, const AbelianizationData& ab) {
  int b = ab.b;
  // Running prefix image in Z[H]; d(uv)/dx = du/dx + u dv/dx with
  // d(x^k)/dx = 1 + x + ... + x^{k-1} for k > 0 and -(x^-1 + ... + x^k)
  // for k < 0.
  LaurentPoly deriv(b);
  Exponents prefix(b, 0);
  for (const Letter& l : w.letters()) {
    Exponents gimg = ab.generator_image(l.gen);
    if (l.gen == x) {
      if (l.exp > 0) {
        Exponents e = prefix;
        for (int i = 0; i < l.exp; ++i) {
          deriv += LaurentPoly::monomial(b, e, 1);
          for (int k = 0; k < b; ++k) e[k] += gimg[k];
        }
      } else {
        Exponents e = prefix;
        for (int i = 0; i < -l.exp; ++i) {
          for (int k = 0; k < b; ++k) e[k] -= gimg[k];
          deriv += LaurentPoly::monomial(b, e, -1);
        }
      }
    }
    for (int k = 0; k < b; ++k) prefix[k] += gimg[k] * l.exp;
  }
  return deriv;
}

AlexanderMatrix alexander_matrix(const Presentation& P) {
  AlexanderMatrix M;
  M.ab = homology(P);
  int g = P.generator_count();
  M.entries.resize(P.relator_count());
  for (int i = 0; i < P.relator_count(); ++i) {
    M.entries[i].reserve(g);
    for (int j = 0; j < g; ++j)
      M.entries[i].push_back(fox_derivative(P.relators()[i], j, M.ab));
  }

  // Fundamental Fox identity per row: sum_j (dr/dx_j)(x_j - 1) = 0.
  const LaurentPoly one = LaurentPoly::constant(M.ab.b, 1);
  for (int i = 0; i < P.relator_count(); ++i) {
    LaurentPoly acc(M.ab.b);
    for (int j = 0; j < g; ++j)
      acc += M.entries[i][j] * (M.ab.generator_monomial(j) - one);
    if (!acc.is_zero())
      fail(ErrorCode::bad_argument, "Fox row identity failed; presentation corrupt");
  }
  return M;
}

namespace {

// Determinant by cofactor expansion along the sparsest row, over any
// matrix of Laurent polynomials. Sizes here stay small (<= 8).
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& M,
                     std::vector<int> rows, std::vector<int> cols, int rank) {
  int n = static_cast<int>(rows.size());
  if (n == 0) return LaurentPoly::constant(rank, 1);
  if (n == 1) return M[rows[0]][cols[0]];

  int best_row = 0, best_nonzero = n + 1;
  for (int i = 0; i < n; ++i) {
    int nz = 0;
    for (int j = 0; j < n; ++j)
      if (!M[rows[i]][cols[j]].is_zero()) ++nz;
    if (nz < best_nonzero) {
      best_nonzero = nz;
      best_row = i;
    }
  }
  if (best_nonzero == 0) return LaurentPoly::zero(rank);

  LaurentPoly det(rank);
  std::vector<int> sub_rows;
  for (int i = 0; i < n; ++i)
    if (i != best_row) sub_rows.push_back(rows[i]);
  for (int j = 0; j < n; ++j) {
    const LaurentPoly& pivot = M[rows[best_row]][cols[j]];
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    for (int k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    LaurentPoly minor = poly_det(M, sub_rows, sub_cols, rank);
    if ((best_row + j) % 2 == 1) minor *= Int(-1);
    det += pivot * minor;
  }
  return det;
}

bool is_unit_content_one(const LaurentPoly& canonical) {
  return canonical.term_count() == 1 && canonical.terms().begin()->second == 1;
}

// Gcd of all k x k minors, accumulated with early exit at 1.
LaurentPoly minor_ideal_gcd(const std::vector<std::vector<LaurentPoly>>& M,
                            int n_rows, int n_cols, int k, int rank) {
  if (k == 0) return LaurentPoly::constant(rank, 1);
  if (n_rows < k || n_cols < k) return LaurentPoly::zero(rank);

  std::vector<int> row_sel(k), col_sel(k);
  LaurentPoly acc(rank);
  std::function<bool(int, int)> iterate_cols = [&](int pos, int start) {
    if (pos == k) {
      LaurentPoly d = poly_det(M, row_sel, col_sel, rank);
      if (d.is_zero()) return false;
      acc = laurent_gcd(acc, d);
      return is_unit_content_one(acc);
    }
    for (int c = start; c <= n_cols - (k - pos); ++c) {
      col_sel[pos] = c;
      if (iterate_cols(pos + 1, c + 1)) return true;
    }
    return false;
  };
  std::function<bool(int, int)> iterate_rows = [&](int pos, int start) {
    if (pos == k) return iterate_cols(0, 0);
    for (int r = start; r <= n_rows - (k - pos); ++r) {
      row_sel[pos] = r;
      if (iterate_rows(pos + 1, r + 1)) return true;
    }
    return false;
  };
  iterate_rows(0, 0);
  return acc;
}

}  // namespace

CanonicalForm multivariable_alexander(const AlexanderMatrix& M) {
  if (M.ab.b < 1)
    fail(ErrorCode::bad_argument, "first Betti number is zero; no free abelian cover");
  int g = M.cols();
  return canonicalize(minor_ideal_gcd(M.entries, M.rows(), g, g - 1, M.ab.b));
}

CanonicalForm multivariable_alexander(const Presentation& P) {
  return multivariable_alexander(alexander_matrix(P));
}

namespace {

const LaurentPoly t_minus_one_squared = [] {
  LaurentPoly t = LaurentPoly::variable(1, 0);
  LaurentPoly p = t - LaurentPoly::constant(1, 1);
  return p * p;
}();

void require_primitive(const Covector& psi) {
  if (!psi.is_primitive())
    fail(ErrorCode::not_primitive, "psi must be a primitive integral class");
}

}  // namespace

CanonicalForm alexander_poly_psi(const Presentation& P, const Covector& psi) {
  AlexanderMatrix M = alexander_matrix(P);
  require_primitive(psi);
  if (psi.rank() != M.ab.b) fail(ErrorCode::rank_mismatch, "psi rank does not match b1");
  CanonicalForm sharp = multivariable_alexander(M);
  LaurentPoly spec = specialize(sharp.poly(), psi);
  if (M.ab.b >= 2) spec = spec * t_minus_one_squared;
  return canonicalize(spec);
}

CanonicalForm alexander_poly_psi_direct(const Presentation& P, const Covector& psi) {
  AlexanderMatrix M = alexander_matrix(P);
  require_primitive(psi);
  if (psi.rank() != M.ab.b) fail(ErrorCode::rank_mismatch, "psi rank does not match b1");
  std::vector<std::vector<LaurentPoly>> spec(M.rows());
  for (int i = 0; i < M.rows(); ++i) {
    spec[i].reserve(M.cols());
    for (int j = 0; j < M.cols(); ++j) spec[i].push_back(specialize(M.entries[i][j], psi));
  }
  int g = M.cols();
  return canonicalize(minor_ideal_gcd(spec, M.rows(), g, g - 1, 1));
}

bool is_nonvanishing(const Presentation& P, const Covector& psi) {
  return !alexander_poly_psi(P, psi).is_zero();
}

int betti_bound(const Presentation& P, const Covector& psi) {
  CanonicalForm d = alexander_poly_psi(P, psi);
  if (d.is_zero())
    fail(ErrorCode::vanishing_polynomial,
         "Alexander polynomial vanishes; Betti bound does not apply");
  return floating_degree(d.poly()) + 1;
}

std::vector<Covector> primitive_classes_in_box(int b, int radius) {
  if (radius < 1) fail(ErrorCode::bad_argument, "box radius must be >= 1");
  std::vector<Covector> out;
  std::vector<long long> v(b, -radius);
  for (;;) {
    // Keep one representative per +- pair: first nonzero entry positive.
    long long lead = 0;
    for (long long x : v)
      if (x != 0) {
        lead = x;
        break;
      }
    if (lead > 0) {
      Int g = 0;
      for (long long x : v) g = int_gcd(g, Int(x));
      if (g == 1) out.push_back(Covector::integral(v));
    }
    int i = b - 1;
    while (i >= 0 && v[i] == radius) v[i--] = -radius;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<Covector> scan_vanishing_classes(const Presentation& P, int box_radius) {
  AlexanderMatrix M = alexander_matrix(P);
  CanonicalForm sharp = multivariable_alexander(M);
  std::vector<Covector> vanishing;
  for (const Covector& psi : primitive_classes_in_box(M.ab.b, box_radius)) {
    LaurentPoly spec = specialize(sharp.poly(), psi);
    // The (t-1)^2 factor for b >= 2 never affects vanishing.
    if (spec.is_zero()) vanishing.push_back(psi);
  }
  return vanishing;
}

SemicontinuityReport semicontinuity_witness(const Presentation& P, const Covector& psi,
                                            int denominator_bound) {
  if (denominator_bound < 1)
    fail(ErrorCode::bad_argument, "denominator bound must be >= 1");
  AlexanderMatrix M = alexander_matrix(P);
  CanonicalForm sharp = multivariable_alexander(M);
  int b = M.ab.b;
  if (psi.rank() != b) fail(ErrorCode::rank_mismatch, "psi rank does not match b1");
  require_primitive(psi);

  auto nonvanishing_of = [&](const Covector& phi) {
    LaurentPoly spec = specialize(sharp.poly(), phi);
    if (b >= 2) spec = spec * t_minus_one_squared;
    return !spec.is_zero();
  };
  if (!nonvanishing_of(psi))
    fail(ErrorCode::vanishing_polynomial, "Delta^psi vanishes at the center class");

  SemicontinuityReport report{psi, denominator_bound, {}, Rat(0)};
  const int q = denominator_bound;
  bool all_ok = true;
  std::vector<int> delta(b, -1);
  for (;;) {
    // phi = primitive multiple of psi + delta/q, i.e. of q*psi + delta.
    std::vector<Int> scaled(b);
    Int g = 0;
    for (int i = 0; i < b; ++i) {
      scaled[i] = Int(q) * rat_num(psi.entries()[i]) + delta[i];
      g = int_gcd(g, scaled[i]);
    }
    if (g != 0) {
      RatVec entries(b);
      for (int i = 0; i < b; ++i) entries[i] = Rat(scaled[i] / g);
      Covector phi(entries);
      bool ok = nonvanishing_of(phi);
      all_ok = all_ok && ok;
      report.entries.push_back({phi, ok});
    }
    int i = b - 1;
    while (i >= 0 && delta[i] == 1) delta[i--] = -1;
    if (i < 0) break;
    ++delta[i];
  }
  report.radius = all_ok ? Rat(1, q) : Rat(0);
  return report;
}

LaurentPoly characteristic_polynomial(const IntMat& A) {
  int n = static_cast<int>(A.size());
  std::vector<std::vector<LaurentPoly>> M(n);
  LaurentPoly t = LaurentPoly::variable(1, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(A[i].size()) != n)
      fail(ErrorCode::bad_argument, "characteristic polynomial needs a square matrix");
    M[i].reserve(n);
    for (int j = 0; j < n; ++j) {
      LaurentPoly entry = LaurentPoly::constant(1, -A[i][j]);
      if (i == j) entry += t;
      M[i].push_back(std::move(entry));
    }
  }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return poly_det(M, idx, idx, 1);
}

bool fibered_degree_check(const IntMat& monodromy, const LaurentPoly& delta_phi) {
  LaurentPoly chi = characteristic_polynomial(monodromy);
  // det(A) is the constant term of det(tI - A) up to sign; invertibility
  // over Z means det = +-1.
  Int det_a = chi.coeff(Exponents{0});
  if (monodromy.size() % 2 == 1) det_a = -det_a;
  if (det_a == 0)
    fail(ErrorCode::singular_matrix, "monodromy matrix is singular");
  if (det_a != 1 && det_a != -1)
    fail(ErrorCode::singular_matrix, "monodromy matrix is not invertible over Z");
  return doteq_equal(delta_phi, chi);
}

}  // namespace tautcert
