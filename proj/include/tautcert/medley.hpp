// Discrete bookkeeping of cyclically stacked foliated blocks: cover
// plans, the Euler-class pushforward formula, convex-combination
// realization with divisibility planning, Betti stabilization across
// cyclic covers, and assembly of virtual Euler class realization
// certificates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautcert/alexander.hpp"
#include "tautcert/polytope.hpp"
#include "tautcert/presentation.hpp"

namespace tautcert {

// Degree-m cyclic stacking of m0 base copies and m_i copies of the
// special block X_i. Block 0 in the sequence is the base; every X_i block
// carries the surface label S_i on both frontiers, so adjacent special
// blocks must share their type.
struct CoverPlan {
  int n = 0;
  std::vector<long long> multiplicities;  // size n+1, [0] = m0 >= 1
  std::vector<int> block_sequence;        // cyclic word, 0 = base, i >= 1 = X_i
  long long degree = 0;
};

// order: explicit cyclic word, or empty for the canonical order (base
// copies first, then the special groups; interleaved with base copies when
// several types are positive, which needs m0 >= #positive types).
CoverPlan build_cover_plan(int n, const std::vector<long long>& multiplicities,
                           const std::vector<int>& order = {});

// Number of prescribed lifts of S_i: m0 + m_i (one lift per base copy plus
// one per insertion).
long long lift_count(const CoverPlan& plan, int i);

// m0*e0 + m1*e1 + ... + mn*en; depends only on the multiplicities.
RatVec pushforward_euler(const CoverPlan& plan, const std::vector<RatVec>& eulers);

// Exact weights mu with mu0 > 0, sum = 1 and mu0 v0 + sum mu_i v_i = w.
// mu0 is maximized, then (mu1..mun) is lexicographically minimized over
// the optimal set. Errors: infeasible when w is outside the face or no
// positive base weight exists.
RatVec convex_realization(const RatVec& w, const RatVec& v0,
                          const std::vector<RatVec>& vertices);

struct DivisibilityResult {
  Int D;                    // minimal D > 0 with all mu_i D / d integral
  std::vector<Int> counts;  // m_i' = mu_i D / d
};

DivisibilityResult divisibility_degree(const RatVec& mu, long long d);

struct StabilizationResult {
  int m_star = 1;      // smallest tested degree attaining the maximum b1
  int b_max = 0;
  int search_bound = 0;
};

// Scans cyclic covers dual to psi for m = 1..4*betti_bound and reports
// where the first Betti number stabilizes. Errors when Delta^psi vanishes.
StabilizationResult stabilize_betti(const Presentation& P, const Covector& psi);

struct MedleyCertificate {
  std::vector<long long> psi;
  int m_star = 1;
  int search_bound = 0;
  std::vector<RatVec> face_vertices;  // v1..vn
  RatVec v0;
  long long v0_degree = 1;            // d
  std::string v0_provenance;          // "assumed" | "fixture" | "vertex-axiom"
  RatVec mu;                          // size n+1, mu[0] for v0
  Int D = 0;
  std::vector<Int> block_counts;      // size n+1
  RatVec target_w;
  bool vertex_axiom = false;
  bool pushforward_check = false;
  bool norm_check = false;
};

// Builds and checks a certificate for target w on the face with the given
// vertices. The ball supplies the norm for the realized-class check; the
// psi/stabilization fields are carried through as metadata.
MedleyCertificate assemble_certificate(const std::vector<RatVec>& face_vertices,
                                       const RatVec& w, const RatVec& v0,
                                       long long v0_degree, bool v0_from_fixture,
                                       const std::vector<long long>& psi,
                                       const StabilizationResult& stab,
                                       const NormBallPair& ball);

struct V0Datum {
  RatVec point;
  long long cover_degree = 1;
  bool from_fixture = false;
};

// Full pipeline: w must lie on the dual-ball boundary with its face F,
// PD(psi) (mapped through `reduce` into ball coordinates) must lie in the
// cone over the interior of F^v, and Delta^psi must not vanish. Vertex
// targets produce vertex-axiom certificates directly.
MedleyCertificate certify_virtual_realization(const Presentation& P,
                                              const NormBallPair& ball,
                                              const IntMat& reduce, const RatVec& w,
                                              const Covector& psi,
                                              const std::optional<V0Datum>& v0_datum);

}  // namespace tautcert
