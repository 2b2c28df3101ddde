// Exact rational convex polytopes for norm balls: hulls with maintained
// V- and H-representations, polar duality, dual face pairs, membership
// trichotomy, and norm evaluation. No tolerances anywhere; every test is
// an exact rational predicate.
#pragma once

#include <optional>
#include <vector>

#include "tautcert/laurent.hpp"
#include "tautcert/linalg.hpp"
#include "tautcert/numeric.hpp"

namespace tautcert {

struct HalfSpace {
  RatVec u;
  Rat rhs;
  bool operator==(const HalfSpace&) const = default;
};

bool ratvec_less(const RatVec& a, const RatVec& b);

class RationalPolytope {
 public:
  // Irredundant hull of the points; lower-dimensional hulls carry their
  // affine hull and facets valid within it. Errors on empty input.
  static RationalPolytope from_points(const std::vector<RatVec>& points);

  // Intersection of u.x <= 1 half-spaces; requires the normals to span
  // (bounded, 0 interior). Facets keep the given order.
  static RationalPolytope from_unit_halfspaces(const std::vector<RatVec>& normals);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(hull_basis_.size()); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const RatVec& hull_origin() const { return hull_origin_; }
  const std::vector<RatVec>& hull_basis() const { return hull_basis_; }

  bool contains(const RatVec& x) const;

  // Gauge max_i u_i.x over facets; meaningful for full-dimensional bodies
  // with 0 interior (all rhs normalized to 1).
  Rat gauge(const RatVec& x) const;

  // Gauge recomputed from the V-representation by exact LP:
  // min sum lambda subject to sum lambda_j v_j = x, lambda >= 0.
  std::optional<Rat> gauge_from_vertices(const RatVec& x) const;

  bool operator==(const RationalPolytope&) const = default;

 private:
  int ambient_dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<HalfSpace> facets_;
  RatVec hull_origin_;
  std::vector<RatVec> hull_basis_;
};

// Polar dual {y : y.x <= 1 on B}; requires B full-dimensional with 0 in
// the interior. Recomputed from scratch (hull of facet normals), so the
// round trip polar(polar(B)) genuinely re-derives B.
RationalPolytope polar(const RationalPolytope& B);

struct Face {
  const RationalPolytope* parent = nullptr;
  std::vector<int> active_facets;  // all facets tight on the face
  std::vector<int> vertex_ids;     // all vertices lying on the face
  int dim = -1;

  std::vector<RatVec> vertex_points() const;
  RatVec barycenter() const;
  bool is_vertex() const { return dim == 0; }
};

// The face cut out by a set of facets (closure of the activity set).
// Empty vertex set yields the empty face (dim -1).
Face face_from_active(const RationalPolytope& P, std::vector<int> active);

// All proper nonempty faces (vertices up to facets).
std::vector<Face> enumerate_proper_faces(const RationalPolytope& P);

// The unique face whose relative interior contains w. Errors when w is
// interior (point_interior) or outside (point_exterior).
Face face_of(const RatVec& w, const RationalPolytope& P);

// True iff x = lambda * y for some rational lambda > 0 and y in the
// relative interior of F.
bool in_cone_over_interior(const RatVec& x, const Face& F);

// Point in the relative interior of F (all-positive barycentric weights)?
bool in_relative_interior(const RatVec& x, const Face& F);

class NormBallPair {
 public:
  // Thurston ball B = {x : |u_i.x| <= 1} and dual ball B* = conv{+-u_i}.
  // Errors: zero functional, odd entries (not_even_lattice), functionals
  // not spanning (degenerate_span).
  static NormBallPair from_functionals(const std::vector<IntVec>& functionals);

  // Synthetic pair from prescribed dual-ball points (centrally
  // symmetrized); no evenness requirement.
  static NormBallPair from_dual_points(const std::vector<RatVec>& points);

  int dim() const { return dim_; }
  const std::vector<IntVec>& functionals() const { return functionals_; }
  const RationalPolytope& ball() const { return ball_; }
  const RationalPolytope& dual_ball() const { return dual_; }

  // max_i |u_i.x| over the dual ball's vertices (the Thurston norm).
  Rat norm(const RatVec& x) const;
  // Dual norm: max over ball vertices of w.v.
  Rat dual_norm(const RatVec& w) const;

  enum class Location { interior, boundary, exterior };
  Location classify_in_ball(const RatVec& x) const;
  Location classify_in_dual(const RatVec& w) const;

 private:
  int dim_ = 0;
  std::vector<IntVec> functionals_;
  RationalPolytope ball_;
  RationalPolytope dual_;
};

// Dual face F^v of a face F of the dual ball: the face of the ball where
// every functional in F evaluates to 1. Errors on the empty face.
Face dual_face(const NormBallPair& pair, const Face& F);

struct AlexanderNormBall {
  int dim = 0;
  bool degenerate = false;           // seminorm only (difference body not full-dim)
  RationalPolytope difference_body;  // Newton(p) - Newton(p), the dual object
  std::optional<RationalPolytope> unit_ball;  // polar, when nondegenerate
};

// The norm alpha -> deg_alpha(delta_sharp, alpha) packaged as the centered
// difference polytope of the Newton polytope. Errors on zero input.
AlexanderNormBall alexander_norm_ball(const LaurentPoly& delta_sharp);

// Support-function value of the difference body at alpha; equals
// deg_alpha(delta_sharp, alpha).
Rat alexander_norm(const AlexanderNormBall& ball, const RatVec& alpha);

struct ThurstonBoundSample {
  RatVec alpha;
  Rat alexander_degree;
  Rat thurston_norm;
  bool ok;
};

struct ThurstonBoundReport {
  bool all_ok = true;
  bool equality_witnessed = false;
  int correction = 0;
  std::vector<ThurstonBoundSample> samples;
};

// Checks deg_alpha(delta_sharp) <= ||PD(alpha)||_Th + (0 if b >= 2 else 2)
// at every dual-ball vertex preimage and on a seeded rational grid.
// `reduce` maps H^1 coordinates (rank b) to ball coordinates; pass the
// identity for full-rank ball data.
ThurstonBoundReport thurston_lower_bound_check(const LaurentPoly& delta_sharp,
                                               const NormBallPair& ball, int b,
                                               const IntMat& reduce,
                                               int grid_samples = 100,
                                               std::uint64_t seed = 1);

}  // namespace tautcert
