// Generators for the standard example families (circle bundles over the
// torus, twisted surface-bundle mapping tori, knot-in-a-ball free
// products), Dehn surgery on presentations, the zero-surgery formula, and
// the fixture file format gluing presentations to norm-ball data.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautcert/alexander.hpp"
#include "tautcert/polytope.hpp"
#include "tautcert/presentation.hpp"

namespace tautcert {

struct SurgerySpec {
  Presentation complement;
  Word meridian;
  Word longitude;
  long long p = 1;  // p >= 0, gcd(p, q) = 1; q = 0 only for the meridian fill p = 1
  long long q = 0;
};

struct FixtureManifold {
  std::string name;
  Presentation presentation;
  std::optional<NormBallPair> ball;
  IntMat reduce;  // k x b map from H^1 coordinates to ball coordinates
  std::map<std::string, RatVec> euler_vectors;
  std::optional<Word> meridian;
  std::optional<Word> longitude;
  bool totally_rationally_null_homologous = false;
};

// <a, b, z | [a,z], [b,z], [a,b] z^-e>: circle bundle over the torus with
// Euler number e.
Presentation circle_bundle_presentation(long long e);

// Mapping torus of the composite of Dehn twists along a_1..a_s on a genus-g
// surface: <a_i, b_i, tau | prod [a_i,b_i], tau x tau^-1 f(x)^-1> with
// f(b_i) = b_i a_i for i <= s and f fixing everything else. Requires
// g >= 2 and 0 <= s <= g.
Presentation mapping_torus_presentation(int g, int s);

// Abelianized monodromy on H_1 of the fiber, basis (a_1, b_1, ..., a_g, b_g).
IntMat mapping_torus_monodromy(int g, int s);

// Torus bundle with monodromy [[0,-1],[1,0]]; its Alexander polynomial for
// the fibered class is t^2 + 1, so cover Betti numbers jump at m = 4.
Presentation torus_bundle_i_presentation();

// Complement presentation plus the filling relator mu^p lambda^q.
Presentation surgered_presentation(const SurgerySpec& spec);

struct SurgeryScalingFill {
  long long p = 0, q = 0;
  CanonicalForm delta_filled;
  CanonicalForm expected;  // p * Delta^psi(base)
  std::string status;      // "ok" | "failed" | "inconclusive"
};

struct SurgeryScalingReport {
  CanonicalForm delta_base;
  std::vector<SurgeryScalingFill> fills;
  bool all_ok = true;
};

// Checks Delta^psi(filled) = p * Delta^psi(base) up to units for each
// fill, where base is the meridian filling of the complement. psi is given
// in the base manifold's H^1 coordinates and transported through the
// canonical identification. Fixtures without the totally-rationally-
// null-homologous flag report mismatches as inconclusive.
SurgeryScalingReport verify_surgery_scaling(const FixtureManifold& fixture,
                                            const std::vector<std::pair<long long, long long>>& fills,
                                            const Covector& psi);

struct ZeroSurgeryResult {
  CanonicalForm delta;
  bool unbounded_betti = false;  // psi(mu) = 0 case: covers have unbounded b1
};

// Delta^psi of the zero surgery from the complement polynomial:
// Delta_complement * (t^{psi_mu} - 1) / (t-1) for b1 >= 2, with (t-1)^2 in
// the denominator when b1 = 1. Exact division enforced.
ZeroSurgeryResult zero_surgery_formula(const CanonicalForm& delta_complement,
                                       long long psi_mu, int b1_complement);

// Named fixtures used across the test and demo suites.
FixtureManifold circle_bundle_fixture(long long e);
FixtureManifold mapping_torus_fixture(int g, int s);  // 1-D reduced ball data
FixtureManifold torus_bundle_i_fixture();
// base # (trefoil in a ball): base is "t3" or the circle bundle N(e).
FixtureManifold product_with_trefoil_fixture(const std::string& base);
FixtureManifold square_ball_fixture();      // N(2) presentation, square dual ball
FixtureManifold octahedron_ball_fixture();  // T^3 presentation, 3-D ball data

// Every fixture above, for sweep-style suites.
std::vector<FixtureManifold> standard_fixtures();

// Fixture file format: presentation lines plus optional sections
// `meridian:`, `longitude:`, `flags: trnh`, `ball:` (functional row),
// `reduce:` (reduction matrix row), `euler:` (label + rationals).
FixtureManifold parse_fixture(const std::string& text, const std::string& name = "");
std::string render_presentation(const Presentation& P);
std::string render_fixture(const FixtureManifold& F);

}  // namespace tautcert
