#include "tautcert/medley.hpp"

#include <algorithm>

#include "tautcert/error.hpp"
#include "tautcert/lp.hpp"

namespace tautcert {

CoverPlan build_cover_plan(int n, const std::vector<long long>& multiplicities,
                           const std::vector<int>& order) {
  if (n < 0 || static_cast<int>(multiplicities.size()) != n + 1)
    fail(ErrorCode::bad_argument, "expected n+1 multiplicities");
  if (multiplicities[0] < 1)
    fail(ErrorCode::invalid_multiplicity, "m0 >= 1 is required");
  for (int i = 1; i <= n; ++i)
    if (multiplicities[i] < 0)
      fail(ErrorCode::invalid_multiplicity, "negative multiplicity");

  CoverPlan plan;
  plan.n = n;
  plan.multiplicities = multiplicities;
  plan.degree = 0;
  for (long long m : multiplicities) plan.degree += m;

  if (!order.empty()) {
    std::vector<long long> counts(n + 1, 0);
    for (int s : order) {
      if (s < 0 || s > n) fail(ErrorCode::order_mismatch, "unknown block symbol");
      ++counts[s];
    }
    if (counts != multiplicities)
      fail(ErrorCode::order_mismatch, "order does not match the multiplicities");
    plan.block_sequence = order;
  } else {
    int positive_types = 0;
    for (int i = 1; i <= n; ++i)
      if (multiplicities[i] > 0) ++positive_types;
    if (positive_types <= 1) {
      plan.block_sequence.assign(multiplicities[0], 0);
      for (int i = 1; i <= n; ++i)
        for (long long c = 0; c < multiplicities[i]; ++c)
          plan.block_sequence.push_back(i);
    } else {
      // Interleave: each special group right after a base copy, so that no
      // two different special types touch.
      if (multiplicities[0] < positive_types)
        fail(ErrorCode::invalid_multiplicity,
             "need at least one base copy per special block type");
      int next_type = 1;
      for (long long b = 0; b < multiplicities[0]; ++b) {
        plan.block_sequence.push_back(0);
        while (next_type <= n && multiplicities[next_type] == 0) ++next_type;
        if (next_type <= n) {
          for (long long c = 0; c < multiplicities[next_type]; ++c)
            plan.block_sequence.push_back(next_type);
          ++next_type;
        }
      }
    }
  }

  // Frontier labels: an X_i block carries S_i on both frontiers, so two
  // adjacent special blocks must share their type; the base block matches
  // any label.
  int len = static_cast<int>(plan.block_sequence.size());
  for (int i = 0; i < len; ++i) {
    int a = plan.block_sequence[i];
    int b = plan.block_sequence[(i + 1) % len];
    if (a != 0 && b != 0 && a != b)
      fail(ErrorCode::frontier_mismatch,
           "adjacent special blocks carry different surface labels");
  }
  return plan;
}

long long lift_count(const CoverPlan& plan, int i) {
  if (i < 1 || i > plan.n) fail(ErrorCode::bad_argument, "block index out of range");
  return plan.multiplicities[0] + plan.multiplicities[i];
}

RatVec pushforward_euler(const CoverPlan& plan, const std::vector<RatVec>& eulers) {
  if (static_cast<int>(eulers.size()) != plan.n + 1)
    fail(ErrorCode::bad_argument, "expected n+1 Euler vectors");
  std::size_t dim = eulers[0].size();
  for (const RatVec& e : eulers)
    if (e.size() != dim) fail(ErrorCode::rank_mismatch, "Euler vectors of mixed rank");
  RatVec out(dim, Rat(0));
  for (int i = 0; i <= plan.n; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out[j] += Rat(plan.multiplicities[i]) * eulers[i][j];
  return out;
}

RatVec convex_realization(const RatVec& w, const RatVec& v0,
                          const std::vector<RatVec>& vertices) {
  int d = static_cast<int>(w.size());
  int n = static_cast<int>(vertices.size());
  // Variables mu_0..mu_n >= 0 with sum 1 and mu0 v0 + sum mu_i v_i = w.
  RatMat A(d + 1, RatVec(n + 1));
  RatVec b(d + 1);
  for (int i = 0; i < d; ++i) {
    A[i][0] = v0[i];
    for (int j = 0; j < n; ++j) A[i][j + 1] = vertices[j][i];
    b[i] = w[i];
  }
  for (int j = 0; j <= n; ++j) A[d][j] = 1;
  b[d] = 1;

  RatVec c(n + 1, Rat(0));
  c[0] = 1;
  LpResult r = lp_maximize(A, b, c);
  if (r.status != LpStatus::optimal)
    fail(ErrorCode::infeasible, "w is not in the face spanned by v0 and the vertices");
  if (r.value == 0)
    fail(ErrorCode::infeasible,
         "no convex realization with positive base weight (w on the face boundary)");

  // Pin mu0 at its maximum, then lexicographically minimize mu1..mun.
  RatVec pinned(n + 1, Rat(0));
  pinned[0] = r.value;
  for (int j = 0; j < n; ++j) {
    RatMat Af = A;
    RatVec bf = b;
    for (int t = 0; t <= j; ++t) {
      RatVec fix(n + 1, Rat(0));
      fix[t] = 1;
      Af.push_back(fix);
      bf.push_back(pinned[t]);
    }
    RatVec cj(n + 1, Rat(0));
    cj[j + 1] = 1;
    LpResult rj = lp_minimize(Af, bf, cj);
    if (rj.status != LpStatus::optimal)
      fail(ErrorCode::infeasible, "lexicographic refinement failed");
    pinned[j + 1] = rj.value;
  }
  return pinned;
}

DivisibilityResult divisibility_degree(const RatVec& mu, long long d) {
  if (d < 1) fail(ErrorCode::bad_argument, "cover degree d must be >= 1");
  Rat total = 0;
  for (const Rat& m : mu) {
    if (m < 0) fail(ErrorCode::bad_argument, "negative weight");
    total += m;
  }
  if (total != 1) fail(ErrorCode::bad_argument, "weights must sum to 1");
  if (mu.empty() || mu[0] <= 0) fail(ErrorCode::bad_argument, "mu0 > 0 is required");

  Int D = 1;
  for (const Rat& m : mu) {
    if (m == 0) continue;
    Int p = rat_num(m), q = rat_den(m);
    Int need = Int(d) * q / int_gcd(p, Int(d));
    D = int_lcm(D, need);
  }
  DivisibilityResult out;
  out.D = D;
  for (const Rat& m : mu) {
    Rat count = m * Rat(D, d);
    if (!is_integer(count))
      fail(ErrorCode::bad_argument, "internal: block count not integral");
    out.counts.push_back(rat_num(count));
  }
  return out;
}

StabilizationResult stabilize_betti(const Presentation& P, const Covector& psi) {
  int bound = betti_bound(P, psi);  // errors when Delta^psi vanishes
  StabilizationResult out;
  out.search_bound = 4 * bound;
  out.m_star = 1;
  out.b_max = 0;
  for (int m = 1; m <= out.search_bound; ++m) {
    int b1 = betti_of_cyclic_cover(P, psi, m);
    if (b1 > out.b_max) {
      out.b_max = b1;
      out.m_star = m;
    }
  }
  return out;
}

namespace {

RatVec scale_vec(const RatVec& v, const Rat& s) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

bool point_in_hull(const RatVec& x, const std::vector<RatVec>& pts) {
  int d = static_cast<int>(x.size());
  int n = static_cast<int>(pts.size());
  RatMat A(d + 1, RatVec(n));
  RatVec b(d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = pts[j][i];
    b[i] = x[i];
  }
  for (int j = 0; j < n; ++j) A[d][j] = 1;
  b[d] = 1;
  return lp_feasible(A, b);
}

}  // namespace

MedleyCertificate assemble_certificate(const std::vector<RatVec>& face_vertices,
                                       const RatVec& w, const RatVec& v0,
                                       long long v0_degree, bool v0_from_fixture,
                                       const std::vector<long long>& psi,
                                       const StabilizationResult& stab,
                                       const NormBallPair& ball) {
  MedleyCertificate cert;
  cert.psi = psi;
  cert.m_star = stab.m_star;
  cert.search_bound = stab.search_bound;
  cert.face_vertices = face_vertices;
  cert.target_w = w;
  int n = static_cast<int>(face_vertices.size());

  bool w_is_vertex =
      std::find(face_vertices.begin(), face_vertices.end(), w) != face_vertices.end();
  if (w_is_vertex) {
    // A vertex target is realized on the base manifold directly; no medley
    // cover is needed.
    cert.vertex_axiom = true;
    cert.v0 = w;
    cert.v0_degree = 1;
    cert.v0_provenance = "vertex-axiom";
    cert.mu = {Rat(1)};
    cert.D = 1;
    cert.block_counts = {Int(1)};
  } else {
    if (!point_in_hull(v0, face_vertices))
      fail(ErrorCode::infeasible, "v0 does not lie in the face");
    cert.v0 = v0;
    cert.v0_degree = v0_degree;
    cert.v0_provenance = v0_from_fixture ? "fixture" : "assumed";
    cert.mu = convex_realization(w, v0, face_vertices);
    DivisibilityResult div = divisibility_degree(cert.mu, v0_degree);

    // A valid canonical block word needs one base copy per positive
    // special type; any sufficiently divisible degree works, so scale D
    // until the base count suffices.
    Int positive_types = 0;
    for (int i = 1; i <= n; ++i)
      if (div.counts[i] > 0) ++positive_types;
    if (positive_types >= 2 && div.counts[0] < positive_types) {
      Int c = (positive_types + div.counts[0] - 1) / div.counts[0];
      div.D *= c;
      for (Int& x : div.counts) x *= c;
    }
    cert.D = div.D;
    cert.block_counts = div.counts;
  }

  // Pushforward identity through an actual plan: block Euler data in base
  // coordinates are d*v0 and d*v_i, and the identity reads
  // sum_i m_i' * (d*v_i) = D * w.
  std::vector<long long> mults;
  for (const Int& c : cert.block_counts) mults.push_back(static_cast<long long>(c));
  int plan_n = cert.vertex_axiom ? 0 : n;
  CoverPlan plan = build_cover_plan(plan_n, mults);
  std::vector<RatVec> eulers;
  eulers.push_back(scale_vec(cert.v0, Rat(cert.v0_degree)));
  if (!cert.vertex_axiom)
    for (const RatVec& v : face_vertices)
      eulers.push_back(scale_vec(v, Rat(cert.v0_degree)));
  RatVec kappa = pushforward_euler(plan, eulers);
  RatVec dw = scale_vec(w, Rat(cert.D));
  cert.pushforward_check = (kappa == dw);

  // Realized class must sit on the unit sphere of the dual norm.
  RatVec realized = scale_vec(kappa, Rat(1) / Rat(cert.D));
  cert.norm_check = (ball.dual_norm(realized) == 1);

  if (!cert.pushforward_check)
    fail(ErrorCode::bad_argument, "internal: pushforward identity failed");
  return cert;
}

MedleyCertificate certify_virtual_realization(const Presentation& P,
                                              const NormBallPair& ball,
                                              const IntMat& reduce, const RatVec& w,
                                              const Covector& psi,
                                              const std::optional<V0Datum>& v0_datum) {
  auto loc = ball.classify_in_dual(w);
  if (loc != NormBallPair::Location::boundary)
    fail(ErrorCode::not_on_boundary,
         loc == NormBallPair::Location::interior
             ? "w lies in the interior of the dual ball"
             : "w lies outside the dual ball");
  Face F = face_of(w, ball.dual_ball());

  if (!psi.is_primitive()) fail(ErrorCode::not_primitive, "psi must be primitive");
  if (!is_nonvanishing(P, psi))
    fail(ErrorCode::vanishing_polynomial,
         "Delta^psi vanishes; the criterion does not apply");

  // PD(psi), mapped into ball coordinates, must lie in the cone over the
  // interior of the dual face.
  int k = ball.dim();
  int b = psi.rank();
  if (static_cast<int>(reduce.size()) != k)
    fail(ErrorCode::rank_mismatch, "reduction matrix rows must match ball dimension");
  RatVec pd(k, Rat(0));
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(reduce[i].size()) != b)
      fail(ErrorCode::rank_mismatch, "reduction matrix columns must match rank");
    for (int j = 0; j < b; ++j) pd[i] += Rat(reduce[i][j]) * psi.entries()[j];
  }
  Face Fv = dual_face(ball, F);
  if (!in_cone_over_interior(pd, Fv))
    fail(ErrorCode::cone_test_failed,
         "PD(psi) is not in the cone over the interior of the dual face");

  StabilizationResult stab = stabilize_betti(P, psi);

  std::vector<long long> psi_ints;
  for (const Rat& e : psi.entries())
    psi_ints.push_back(static_cast<long long>(rat_num(e)));

  std::vector<RatVec> verts = F.vertex_points();
  RatVec v0;
  long long d = 1;
  bool from_fixture = false;
  if (F.dim == 0) {
    v0 = w;  // handled by the vertex-axiom path
  } else if (v0_datum) {
    v0 = v0_datum->point;
    d = v0_datum->cover_degree;
    from_fixture = v0_datum->from_fixture;
  } else {
    v0 = F.barycenter();
  }
  return assemble_certificate(verts, w, v0, d, from_fixture, psi_ints, stab, ball);
}

}  // namespace tautcert
