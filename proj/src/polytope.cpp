#include "tautcert/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tautcert/error.hpp"
#include "tautcert/lp.hpp"
#include "tautcert/random.hpp"

namespace tautcert {

bool ratvec_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Scale (u, rhs) by a positive factor to the canonical representative:
// rhs != 0 -> rhs in {1,-1}; rhs = 0 -> integer primitive u. Only
// positive factors, so the half-space set is unchanged.
HalfSpace normalize_halfspace(RatVec u, Rat rhs) {
  if (rhs != 0) {
    Rat s = Rat(1) / rat_abs(rhs);
    for (auto& x : u) x *= s;
    return {std::move(u), rhs > 0 ? Rat(1) : Rat(-1)};
  }
  Int l = 1;
  for (const Rat& x : u) l = int_lcm(l, rat_den(x));
  Int g = 0;
  for (const Rat& x : u) g = int_gcd(g, rat_num(x) * (l / rat_den(x)));
  if (g == 0) fail(ErrorCode::bad_argument, "zero normal vector");
  Rat s(l, g);
  for (auto& x : u) x *= s;
  return {std::move(u), Rat(0)};
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.u != b.u) return ratvec_less(a.u, b.u);
  return a.rhs < b.rhs;
}

// Local coordinates of p in the affine frame (origin, basis).
RatVec local_coords(const RatVec& p, const RatVec& origin,
                    const std::vector<RatVec>& basis) {
  int d = static_cast<int>(p.size());
  int k = static_cast<int>(basis.size());
  RatMat A(d, RatVec(k));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < k; ++j) A[i][j] = basis[j][i];
  auto sol = solve_rational(A, sub(p, origin));
  if (!sol) fail(ErrorCode::bad_argument, "point outside the affine hull");
  return *sol;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> sel(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      fn(sel);
      return;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      sel[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  if (k == 0)
    fn({});
  else if (k <= n)
    rec(0, 0);
}

}  // namespace

RationalPolytope RationalPolytope::from_points(const std::vector<RatVec>& points_in) {
  if (points_in.empty()) fail(ErrorCode::empty_input, "hull of no points");
  int d = static_cast<int>(points_in[0].size());
  std::vector<RatVec> points = points_in;
  for (const RatVec& p : points)
    if (static_cast<int>(p.size()) != d)
      fail(ErrorCode::rank_mismatch, "points of mixed dimension");
  std::sort(points.begin(), points.end(), ratvec_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope out;
  out.ambient_dim_ = d;
  out.hull_origin_ = points[0];

  // Greedy affine basis from point differences.
  RatMat accum;
  for (const RatVec& p : points) {
    RatVec diff = sub(p, points[0]);
    RatMat trial = accum;
    trial.push_back(diff);
    if (rational_rank(trial) > static_cast<int>(accum.size())) {
      accum.push_back(diff);
      out.hull_basis_.push_back(diff);
    }
  }
  int k = static_cast<int>(out.hull_basis_.size());
  if (k == 0) {
    out.vertices_ = {points[0]};
    return out;
  }

  std::vector<RatVec> local;
  local.reserve(points.size());
  for (const RatVec& p : points)
    local.push_back(local_coords(p, out.hull_origin_, out.hull_basis_));

  // Supporting hyperplanes spanned by k-subsets of points. Every facet of
  // a k-polytope contains at least k affinely independent input points, so
  // this enumeration finds all of them.
  int n = static_cast<int>(points.size());
  std::set<std::pair<RatVec, Rat>> seen;
  std::vector<HalfSpace> local_facets;
  for_each_subset(n, k, [&](const std::vector<int>& sel) {
    RatMat diffs;
    for (int i = 1; i < k; ++i) diffs.push_back(sub(local[sel[i]], local[sel[0]]));
    std::vector<RatVec> nullsp =
        k > 1 ? rational_nullspace(diffs) : std::vector<RatVec>{RatVec{Rat(1)}};
    if (nullsp.size() != 1) return;  // not affinely independent
    RatVec nvec = nullsp[0];
    Rat c = dot(nvec, local[sel[0]]);
    int side = 0;
    for (const RatVec& q : local) {
      Rat v = dot(nvec, q) - c;
      if (v > 0) {
        if (side < 0) return;
        side = 1;
      } else if (v < 0) {
        if (side > 0) return;
        side = -1;
      }
    }
    if (side == 0) return;
    if (side > 0) {
      for (auto& x : nvec) x = -x;
      c = -c;
    }
    HalfSpace h = normalize_halfspace(std::move(nvec), c);
    if (seen.insert({h.u, h.rhs}).second) local_facets.push_back(std::move(h));
  });

  // Vertices: points whose active facet normals span the local space.
  for (int i = 0; i < n; ++i) {
    RatMat active;
    for (const HalfSpace& h : local_facets)
      if (dot(h.u, local[i]) == h.rhs) active.push_back(h.u);
    if (rational_rank(active) == k) out.vertices_.push_back(points[i]);
  }

  // Lift facet normals to ambient coordinates: solve basis^T . u = u_loc.
  RatMat Bt(k, RatVec(d));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) Bt[j][i] = out.hull_basis_[j][i];
  for (const HalfSpace& h : local_facets) {
    auto u_amb = solve_rational(Bt, h.u);
    if (!u_amb) fail(ErrorCode::bad_argument, "facet lift failed");
    Rat rhs = h.rhs + dot(*u_amb, out.hull_origin_);
    out.facets_.push_back(normalize_halfspace(std::move(*u_amb), rhs));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), halfspace_less);
  return out;
}

RationalPolytope RationalPolytope::from_unit_halfspaces(const std::vector<RatVec>& normals) {
  if (normals.empty()) fail(ErrorCode::empty_input, "no half-spaces");
  int d = static_cast<int>(normals[0].size());
  RatMat m(normals.begin(), normals.end());
  if (rational_rank(m) != d)
    fail(ErrorCode::degenerate_span, "half-space normals do not span");

  RationalPolytope out;
  out.ambient_dim_ = d;
  out.hull_origin_.assign(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    RatVec e(d, Rat(0));
    e[i] = 1;
    out.hull_basis_.push_back(std::move(e));
  }
  for (const RatVec& u : normals) out.facets_.push_back({u, Rat(1)});

  int n = static_cast<int>(normals.size());
  std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> verts(ratvec_less);
  for_each_subset(n, d, [&](const std::vector<int>& sel) {
    RatMat A(d, RatVec(d));
    for (int i = 0; i < d; ++i) A[i] = normals[sel[i]];
    if (rational_rank(A) != d) return;
    auto x = solve_rational(A, RatVec(d, Rat(1)));
    if (!x) return;
    for (const RatVec& u : normals)
      if (dot(u, *x) > 1) return;
    verts.insert(*x);
  });
  if (verts.empty())
    fail(ErrorCode::degenerate_span, "half-space intersection has no vertex");
  out.vertices_.assign(verts.begin(), verts.end());
  return out;
}

bool RationalPolytope::contains(const RatVec& x) const {
  int d = ambient_dim_;
  int k = dim();
  if (static_cast<int>(x.size()) != d)
    fail(ErrorCode::rank_mismatch, "point dimension mismatch");
  if (k == 0) return x == hull_origin_;
  if (k < d) {
    RatMat A(d, RatVec(k));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < k; ++j) A[i][j] = hull_basis_[j][i];
    if (!solve_rational(A, sub(x, hull_origin_))) return false;
  }
  for (const HalfSpace& h : facets_)
    if (dot(h.u, x) > h.rhs) return false;
  return true;
}

Rat RationalPolytope::gauge(const RatVec& x) const {
  if (dim() != ambient_dim_)
    fail(ErrorCode::degenerate_span, "gauge needs a full-dimensional body");
  Rat g = 0;
  for (const HalfSpace& h : facets_) {
    if (h.rhs != 1) fail(ErrorCode::bad_argument, "gauge needs unit-offset facets");
    g = std::max(g, dot(h.u, x));
  }
  return g;
}

std::optional<Rat> RationalPolytope::gauge_from_vertices(const RatVec& x) const {
  int d = ambient_dim_;
  int n = static_cast<int>(vertices_.size());
  RatMat A(d, RatVec(n));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = vertices_[j][i];
  RatVec c(n, Rat(1));
  LpResult r = lp_minimize(A, x, c);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.value;
}

RationalPolytope polar(const RationalPolytope& B) {
  if (B.dim() != B.ambient_dim())
    fail(ErrorCode::degenerate_span, "polar needs a full-dimensional body");
  std::vector<RatVec> pts;
  for (const HalfSpace& h : B.facets()) {
    if (h.rhs <= 0) fail(ErrorCode::bad_argument, "polar needs 0 in the interior");
    RatVec u = h.u;
    for (auto& v : u) v /= h.rhs;
    pts.push_back(std::move(u));
  }
  return RationalPolytope::from_points(pts);
}

std::vector<RatVec> Face::vertex_points() const {
  std::vector<RatVec> pts;
  pts.reserve(vertex_ids.size());
  for (int id : vertex_ids) pts.push_back(parent->vertices()[id]);
  return pts;
}

RatVec Face::barycenter() const {
  if (vertex_ids.empty()) fail(ErrorCode::empty_face, "barycenter of the empty face");
  RatVec c(parent->ambient_dim(), Rat(0));
  for (int id : vertex_ids)
    for (int i = 0; i < parent->ambient_dim(); ++i) c[i] += parent->vertices()[id][i];
  Rat inv = Rat(1, static_cast<long long>(vertex_ids.size()));
  for (auto& x : c) x *= inv;
  return c;
}

namespace {

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  RatMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rational_rank(diffs);
}

}  // namespace

Face face_from_active(const RationalPolytope& P, std::vector<int> active) {
  Face f;
  f.parent = &P;
  for (int v = 0; v < static_cast<int>(P.vertices().size()); ++v) {
    bool on_all = true;
    for (int a : active) {
      const HalfSpace& h = P.facets()[a];
      if (dot(h.u, P.vertices()[v]) != h.rhs) {
        on_all = false;
        break;
      }
    }
    if (on_all) f.vertex_ids.push_back(v);
  }
  if (f.vertex_ids.empty()) {
    f.dim = -1;
    return f;
  }
  // Close the activity set: every facet tight on all face vertices.
  for (int a = 0; a < static_cast<int>(P.facets().size()); ++a) {
    const HalfSpace& h = P.facets()[a];
    bool tight = true;
    for (int v : f.vertex_ids)
      if (dot(h.u, P.vertices()[v]) != h.rhs) {
        tight = false;
        break;
      }
    if (tight) f.active_facets.push_back(a);
  }
  f.dim = affine_dim(f.vertex_points());
  return f;
}

std::vector<Face> enumerate_proper_faces(const RationalPolytope& P) {
  std::map<std::vector<int>, Face> faces;
  int nf = static_cast<int>(P.facets().size());
  std::vector<std::vector<int>> frontier;
  auto add_face = [&](const Face& f) {
    if (f.vertex_ids.empty()) return;
    if (faces.emplace(f.vertex_ids, f).second) frontier.push_back(f.vertex_ids);
  };
  for (int a = 0; a < nf; ++a) add_face(face_from_active(P, {a}));

  // Close the family under meets: intersect vertex sets, then re-close the
  // activity set.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> current = std::move(frontier);
    frontier.clear();
    std::vector<std::vector<int>> keys;
    for (const auto& [ids, f] : faces) keys.push_back(ids);
    for (const auto& ids : current) {
      for (const auto& other : keys) {
        std::vector<int> meet;
        std::set_intersection(ids.begin(), ids.end(), other.begin(), other.end(),
                              std::back_inserter(meet));
        if (meet.empty() || faces.count(meet)) continue;
        std::vector<int> active;
        for (int a = 0; a < nf; ++a) {
          const HalfSpace& h = P.facets()[a];
          bool tight = true;
          for (int v : meet)
            if (dot(h.u, P.vertices()[v]) != h.rhs) {
              tight = false;
              break;
            }
          if (tight) active.push_back(a);
        }
        add_face(face_from_active(P, active));
      }
    }
  }
  std::vector<Face> out;
  for (auto& [ids, f] : faces)
    if (f.dim < P.dim()) out.push_back(f);
  return out;
}

Face face_of(const RatVec& w, const RationalPolytope& P) {
  if (P.dim() != P.ambient_dim())
    fail(ErrorCode::degenerate_span, "face location needs a full-dimensional body");
  Rat g = P.gauge(w);
  if (g < 1) fail(ErrorCode::point_interior, "point lies in the interior");
  if (g > 1) fail(ErrorCode::point_exterior, "point lies outside");
  std::vector<int> active;
  for (int a = 0; a < static_cast<int>(P.facets().size()); ++a)
    if (dot(P.facets()[a].u, w) == P.facets()[a].rhs) active.push_back(a);
  Face f = face_from_active(P, active);
  if (f.vertex_ids.empty()) fail(ErrorCode::point_exterior, "point is not on any face");
  return f;
}

bool in_relative_interior(const RatVec& x, const Face& F) {
  if (F.vertex_ids.empty()) return false;
  // max eps subject to sum (l_j + eps) v_j = x, sum (l_j + eps) = 1,
  // l >= 0, eps >= 0; relative interior iff the optimum is positive.
  int d = F.parent->ambient_dim();
  auto pts = F.vertex_points();
  int n = static_cast<int>(pts.size());
  RatMat A(d + 1, RatVec(n + 1));
  RatVec b(d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = pts[j][i];
    Rat s = 0;
    for (int j = 0; j < n; ++j) s += pts[j][i];
    A[i][n] = s;
    b[i] = x[i];
  }
  for (int j = 0; j < n; ++j) A[d][j] = 1;
  A[d][n] = n;
  b[d] = 1;
  RatVec c(n + 1, Rat(0));
  c[n] = 1;
  LpResult r = lp_maximize(A, b, c);
  return r.status == LpStatus::optimal && r.value > 0;
}

bool in_cone_over_interior(const RatVec& x, const Face& F) {
  if (F.vertex_ids.empty()) fail(ErrorCode::empty_face, "cone over the empty face");
  bool zero = std::all_of(x.begin(), x.end(), [](const Rat& v) { return v == 0; });
  if (zero) return false;
  // x = sum lambda_j v_j with every lambda_j > 0, lambda = l + eps.
  int d = F.parent->ambient_dim();
  auto pts = F.vertex_points();
  int n = static_cast<int>(pts.size());
  RatMat A(d, RatVec(n + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = pts[j][i];
    Rat s = 0;
    for (int j = 0; j < n; ++j) s += pts[j][i];
    A[i][n] = s;
  }
  RatVec c(n + 1, Rat(0));
  c[n] = 1;
  LpResult r = lp_maximize(A, RatVec(x), c);
  if (r.status == LpStatus::unbounded) return true;
  return r.status == LpStatus::optimal && r.value > 0;
}

NormBallPair NormBallPair::from_functionals(const std::vector<IntVec>& functionals) {
  if (functionals.empty()) fail(ErrorCode::empty_input, "no functionals");
  int d = static_cast<int>(functionals[0].size());
  for (const IntVec& u : functionals) {
    if (static_cast<int>(u.size()) != d)
      fail(ErrorCode::rank_mismatch, "functionals of mixed dimension");
    if (std::all_of(u.begin(), u.end(), [](const Int& v) { return v == 0; }))
      fail(ErrorCode::degenerate_span, "zero functional");
    for (const Int& v : u)
      if (v % 2 != 0) fail(ErrorCode::not_even_lattice, "functional entries must be even");
  }
  RatMat m;
  for (const IntVec& u : functionals) {
    RatVec r(d);
    for (int i = 0; i < d; ++i) r[i] = Rat(u[i]);
    m.push_back(std::move(r));
  }
  if (rational_rank(m) != d)
    fail(ErrorCode::degenerate_span,
         "functionals do not span; the norm would be a seminorm");

  NormBallPair out;
  out.dim_ = d;
  out.functionals_ = functionals;
  std::vector<RatVec> pts;
  for (const IntVec& u : functionals) {
    RatVec p(d), q(d);
    for (int i = 0; i < d; ++i) {
      p[i] = Rat(u[i]);
      q[i] = Rat(-u[i]);
    }
    pts.push_back(std::move(p));
    pts.push_back(std::move(q));
  }
  out.dual_ = RationalPolytope::from_points(pts);
  out.ball_ = RationalPolytope::from_unit_halfspaces(out.dual_.vertices());
  return out;
}

NormBallPair NormBallPair::from_dual_points(const std::vector<RatVec>& points) {
  if (points.empty()) fail(ErrorCode::empty_input, "no dual points");
  int d = static_cast<int>(points[0].size());
  std::vector<RatVec> pts = points;
  for (const RatVec& p : points) {
    RatVec q(d);
    for (int i = 0; i < d; ++i) q[i] = -p[i];
    pts.push_back(std::move(q));
  }
  NormBallPair out;
  out.dim_ = d;
  out.dual_ = RationalPolytope::from_points(pts);
  if (out.dual_.dim() != d)
    fail(ErrorCode::degenerate_span, "dual points do not span");
  out.ball_ = RationalPolytope::from_unit_halfspaces(out.dual_.vertices());
  return out;
}

Rat NormBallPair::norm(const RatVec& x) const {
  Rat g = 0;
  for (const RatVec& u : dual_.vertices()) g = std::max(g, dot(u, x));
  return g;
}

Rat NormBallPair::dual_norm(const RatVec& w) const {
  Rat g = 0;
  for (const RatVec& v : ball_.vertices()) g = std::max(g, dot(w, v));
  return g;
}

NormBallPair::Location NormBallPair::classify_in_ball(const RatVec& x) const {
  Rat g = norm(x);
  if (g < 1) return Location::interior;
  if (g == 1) return Location::boundary;
  return Location::exterior;
}

NormBallPair::Location NormBallPair::classify_in_dual(const RatVec& w) const {
  Rat g = dual_norm(w);
  if (g < 1) return Location::interior;
  if (g == 1) return Location::boundary;
  return Location::exterior;
}

Face dual_face(const NormBallPair& pair, const Face& F) {
  if (F.vertex_ids.empty()) fail(ErrorCode::empty_face, "dual of the empty face");
  if (F.parent != &pair.dual_ball())
    fail(ErrorCode::bad_argument, "face does not belong to the dual ball");
  // Ball facets are indexed by dual-ball vertices (construction order).
  Face f = face_from_active(pair.ball(), F.vertex_ids);
  if (f.vertex_ids.empty()) fail(ErrorCode::empty_face, "dual face is empty");
  return f;
}

AlexanderNormBall alexander_norm_ball(const LaurentPoly& delta_sharp) {
  if (delta_sharp.is_zero())
    fail(ErrorCode::zero_polynomial, "norm of the zero polynomial");
  int b = delta_sharp.rank();
  std::vector<RatVec> diffs;
  for (const auto& [e1, c1] : delta_sharp.terms())
    for (const auto& [e2, c2] : delta_sharp.terms()) {
      RatVec d(b);
      for (int i = 0; i < b; ++i) d[i] = Rat(e1[i] - e2[i]);
      diffs.push_back(std::move(d));
    }
  AlexanderNormBall out;
  out.dim = b;
  out.difference_body = RationalPolytope::from_points(diffs);
  out.degenerate = out.difference_body.dim() < b;
  if (!out.degenerate) out.unit_ball = polar(out.difference_body);
  return out;
}

Rat alexander_norm(const AlexanderNormBall& ball, const RatVec& alpha) {
  Rat best = 0;
  for (const RatVec& v : ball.difference_body.vertices())
    best = std::max(best, dot(alpha, v));
  return best;
}

ThurstonBoundReport thurston_lower_bound_check(const LaurentPoly& delta_sharp,
                                               const NormBallPair& ball, int b,
                                               const IntMat& reduce,
                                               int grid_samples, std::uint64_t seed) {
  int k = ball.dim();
  if (static_cast<int>(reduce.size()) != k)
    fail(ErrorCode::rank_mismatch, "reduction matrix rows must match ball dimension");
  for (const IntVec& row : reduce)
    if (static_cast<int>(row.size()) != b)
      fail(ErrorCode::rank_mismatch, "reduction matrix columns must match rank");

  ThurstonBoundReport report;
  report.correction = (b >= 2) ? 0 : 2;

  RatMat reduce_q(k, RatVec(b));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < b; ++j) reduce_q[i][j] = Rat(reduce[i][j]);

  auto check_alpha = [&](RatVec alpha) {
    RatVec reduced(k, Rat(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < b; ++j) reduced[i] += reduce_q[i][j] * alpha[j];
    // The dual-ball vertex list contains both signs, so the max over it is
    // already max |u_i . x|.
    Rat thn = ball.norm(reduced);
    Covector a(alpha);
    Rat lhs = deg_alpha(delta_sharp, a);
    bool ok = lhs <= thn + report.correction;
    report.all_ok = report.all_ok && ok;
    if (lhs == thn && lhs > 0) report.equality_witnessed = true;
    report.samples.push_back({std::move(alpha), lhs, thn, ok});
  };

  // Dual-ball vertices pulled back through the reduction.
  for (const RatVec& v : ball.dual_ball().vertices()) {
    auto alpha = solve_rational(reduce_q, v);
    if (!alpha)
      fail(ErrorCode::bad_argument, "dual-ball vertex has no preimage under reduce");
    check_alpha(*alpha);
  }

  SplitMix64 rng(seed);
  for (int s = 0; s < grid_samples; ++s) {
    RatVec alpha(b);
    for (int j = 0; j < b; ++j) alpha[j] = Rat(rng.range(-9, 9), rng.range(1, 4));
    check_alpha(std::move(alpha));
  }
  return report;
}

}  // namespace tautcert
