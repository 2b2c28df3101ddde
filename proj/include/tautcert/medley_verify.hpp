// Independent revalidation of medley certificates. Deliberately shares no
// code with the assembler: every identity is recomputed from the raw
// certificate fields.
#pragma once

#include <string>
#include <vector>

#include "tautcert/medley.hpp"

namespace tautcert {

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks, with exact rational arithmetic:
//   - weights: mu0 > 0, every mu_i >= 0, sum mu_i = 1;
//   - convexity: mu0 v0 + sum mu_i v_i = w;
//   - integrality: block_counts[i] = mu_i D / d, all integers, m0' >= 1;
//   - pushforward: d * sum_i m_i' v_i = D * w;
//   - realized class: the dual norm of (d/D) sum_i m_i' v_i equals 1;
//   - face data: every face vertex and w itself lie on the dual-ball
//     boundary.
// Vertex-axiom certificates are checked against their degenerate shape.
VerifyResult verify_certificate(const MedleyCertificate& cert, const NormBallPair& ball);

}  // namespace tautcert
