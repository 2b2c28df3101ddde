// Exact rational linear programming via two-phase tableau simplex with
// Bland's rule. Deterministic: identical inputs give identical optimal
// bases, which certificate generation relies on.
#pragma once

#include <vector>

#include "tautcert/numeric.hpp"

namespace tautcert {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value = 0;   // optimum of the objective
  RatVec x;        // an optimal basic solution (when optimal)
};

// min c.x  subject to  A x = b,  x >= 0.
LpResult lp_minimize(const RatMat& A, const RatVec& b, const RatVec& c);

// max c.x subject to the same constraints.
LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c);

// Whether {x >= 0 : A x = b} is nonempty.
bool lp_feasible(const RatMat& A, const RatVec& b);

}  // namespace tautcert
