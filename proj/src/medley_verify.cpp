#include "tautcert/medley_verify.hpp"

namespace tautcert {

namespace {

void check(VerifyResult& r, bool condition, const std::string& what) {
  if (!condition) {
    r.ok = false;
    r.failures.push_back(what);
  }
}

}  // namespace

VerifyResult verify_certificate(const MedleyCertificate& cert, const NormBallPair& ball) {
  VerifyResult r;
  const std::size_t n = cert.face_vertices.size();
  const std::size_t dim = cert.target_w.size();

  // Points v_0 = cert.v0, v_i = face_vertices[i-1].
  auto point = [&](std::size_t i) -> const RatVec& {
    return i == 0 ? cert.v0 : cert.face_vertices[i - 1];
  };
  const std::size_t blocks = cert.vertex_axiom ? 1 : n + 1;

  check(r, cert.mu.size() == blocks, "weight vector has wrong length");
  check(r, cert.block_counts.size() == blocks, "block count vector has wrong length");
  check(r, cert.D > 0, "total degree D must be positive");
  check(r, cert.v0_degree >= 1, "base cover degree must be >= 1");
  check(r, cert.v0.size() == dim, "v0 dimension mismatch");
  if (!r.ok) return r;

  Rat mu_sum = 0;
  for (const Rat& m : cert.mu) {
    check(r, m >= 0, "negative weight");
    mu_sum += m;
  }
  check(r, mu_sum == 1, "weights do not sum to 1");
  check(r, cert.mu[0] > 0, "mu0 must be positive");

  // Convexity: sum mu_i v_i = w.
  RatVec combo(dim, Rat(0));
  for (std::size_t i = 0; i < blocks; ++i)
    for (std::size_t j = 0; j < dim; ++j) combo[j] += cert.mu[i] * point(i)[j];
  check(r, combo == cert.target_w, "mu does not realize w as a convex combination");

  // Integrality: counts[i] = mu_i D / d.
  check(r, cert.block_counts[0] >= 1, "base block count must be >= 1");
  for (std::size_t i = 0; i < blocks; ++i) {
    Rat expected = cert.mu[i] * Rat(cert.D, cert.v0_degree);
    check(r, is_integer(expected) && rat_num(expected) == cert.block_counts[i],
          "block count " + std::to_string(i) + " is not mu_i * D / d");
    check(r, cert.block_counts[i] >= 0, "negative block count");
  }

  // Pushforward identity: d * sum_i m_i' v_i = D * w.
  RatVec pushed(dim, Rat(0));
  for (std::size_t i = 0; i < blocks; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      pushed[j] += Rat(cert.block_counts[i]) * point(i)[j];
  bool identity = true;
  for (std::size_t j = 0; j < dim; ++j)
    if (Rat(cert.v0_degree) * pushed[j] != Rat(cert.D) * cert.target_w[j]) identity = false;
  check(r, identity, "pushforward identity d * sum m_i' v_i = D * w failed");

  // Realized class on the unit sphere: dual norm via the ball's vertices.
  Rat norm = 0;
  for (const RatVec& v : ball.ball().vertices()) {
    Rat s = 0;
    for (std::size_t j = 0; j < dim; ++j)
      s += Rat(cert.v0_degree) * pushed[j] / Rat(cert.D) * v[j];
    norm = std::max(norm, s);
  }
  check(r, norm == 1, "realized class is not on the dual norm unit sphere");

  // Face data sanity: w and each face vertex on the dual-ball boundary.
  auto on_boundary = [&](const RatVec& x) {
    Rat g = 0;
    for (const RatVec& v : ball.ball().vertices()) {
      Rat s = 0;
      for (std::size_t j = 0; j < dim; ++j) s += x[j] * v[j];
      g = std::max(g, s);
    }
    return g == 1;
  };
  check(r, on_boundary(cert.target_w), "w is not on the dual-ball boundary");
  for (const RatVec& v : cert.face_vertices)
    check(r, on_boundary(v), "face vertex is not on the dual-ball boundary");

  if (cert.vertex_axiom) {
    check(r, cert.mu.size() == 1 && cert.mu[0] == 1, "vertex-axiom weights must be {1}");
    check(r, cert.v0 == cert.target_w, "vertex-axiom base class must equal w");
    check(r, cert.v0_provenance == "vertex-axiom", "vertex-axiom provenance expected");
  }
  check(r, cert.pushforward_check, "assembler pushforward flag unset");
  check(r, cert.norm_check, "assembler norm flag unset");
  return r;
}

}  // namespace tautcert
