// Exact integer and rational linear algebra: Smith normal form with
// transform tracking, integer linear solving, and rational Gaussian
// elimination (rank, solve, nullspace).
#pragma once

#include <optional>
#include <vector>

#include "tautcert/numeric.hpp"

namespace tautcert {

struct SmithResult {
  // U * A * V = D with U, V unimodular; diag holds the nonnegative
  // diagonal of D with d1 | d2 | ... ; rank = number of nonzero entries.
  IntMat U;
  IntMat V;
  IntVec diag;
  int rank = 0;
};

SmithResult smith_normal_form(const IntMat& A);

IntMat identity_matrix(int n);
IntMat int_mat_mul(const IntMat& A, const IntMat& B);
IntVec int_mat_vec(const IntMat& A, const IntVec& x);

// Solves A x = b over the integers; nullopt when no integral solution.
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);

int rational_rank(RatMat A);

// One solution of A x = b over the rationals, or nullopt if inconsistent.
std::optional<RatVec> solve_rational(RatMat A, RatVec b);

// Basis of the right nullspace of A.
std::vector<RatVec> rational_nullspace(RatMat A);

}  // namespace tautcert
