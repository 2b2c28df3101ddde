// Fox calculus and Alexander invariants: the Fox Jacobian over Z[H],
// multivariable and specialized Alexander polynomials as gcds of
// elementary-ideal minors, nonvanishing tests, Betti bounds from cover
// degrees, vanishing-class box scans, and sampled semicontinuity
// witnesses.
#pragma once

#include <vector>

#include "tautcert/laurent.hpp"
#include "tautcert/presentation.hpp"

namespace tautcert {

struct AlexanderMatrix {
  // entries[i][j] = abelianized Fox derivative d r_i / d x_j over Z[H].
  std::vector<std::vector<LaurentPoly>> entries;
  AbelianizationData ab;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

// Abelianized free derivative of w by generator x, as an element of Z[H].
LaurentPoly fox_derivative(const Word& w, int x, const AbelianizationData& ab);

// Fox Jacobian of P. The fundamental identity
// sum_j (dr/dx_j)(x_j - 1) = 0 is checked on every build.
AlexanderMatrix alexander_matrix(const Presentation& P);

// Gcd of the (g-1)x(g-1) minors of the Fox Jacobian over Z[H];
// zero when there are fewer than g-1 relators. Requires b >= 1.
CanonicalForm multivariable_alexander(const Presentation& P);
CanonicalForm multivariable_alexander(const AlexanderMatrix& M);

// Delta^psi via the multivariable polynomial: specialize(Delta^#, psi)
// times (t-1)^2 when b >= 2, and as-is when b = 1.
CanonicalForm alexander_poly_psi(const Presentation& P, const Covector& psi);

// Independent route: gcd of the (g-1)-minors of the psi-specialized
// Jacobian over Z[t,t^-1].
CanonicalForm alexander_poly_psi_direct(const Presentation& P, const Covector& psi);

bool is_nonvanishing(const Presentation& P, const Covector& psi);

// floating_degree(Delta^psi) + 1; errors when Delta^psi vanishes.
int betti_bound(const Presentation& P, const Covector& psi);

// All primitive integer classes with entries in [-r, r], one per +- pair
// (first nonzero entry positive), in lexicographic order.
std::vector<Covector> primitive_classes_in_box(int b, int radius);

// The primitive classes in the box whose Delta^psi vanishes.
std::vector<Covector> scan_vanishing_classes(const Presentation& P, int box_radius);

struct SemicontinuityEntry {
  Covector phi;
  bool nonvanishing;
};
struct SemicontinuityReport {
  Covector psi;
  int denominator_bound;
  std::vector<SemicontinuityEntry> entries;
  Rat radius;  // largest tested sup-norm perturbation with all-nonvanishing outcome
};

// Samples primitive multiples of psi + delta over the grid
// delta in {0, +-1/bound}^b and reports nonvanishing per class.
SemicontinuityReport semicontinuity_witness(const Presentation& P, const Covector& psi,
                                            int denominator_bound);

// True iff delta_phi equals det(tI - monodromy) up to a unit. The matrix
// must be invertible over the integers.
bool fibered_degree_check(const IntMat& monodromy, const LaurentPoly& delta_phi);

// Characteristic polynomial det(tI - A) in Z[t].
LaurentPoly characteristic_polynomial(const IntMat& A);

}  // namespace tautcert
