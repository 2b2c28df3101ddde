#include "tautcert/json_io.hpp"

#include <algorithm>

#include "tautcert/error.hpp"

namespace tautcert {

namespace {

long long to_ll(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    fail(ErrorCode::bad_argument, "integer too large for JSON serialization");
  return static_cast<long long>(v);
}

}  // namespace

Json rat_to_json(const Rat& r) {
  return Json::array({to_ll(rat_num(r)), to_ll(rat_den(r))});
}

Rat rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(ErrorCode::parse_error, "rational must be a [num, den] pair");
  return Rat(Int(j[0].get<long long>()), Int(j[1].get<long long>()));
}

Json ratvec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rat_to_json(r));
  return out;
}

RatVec ratvec_from_json(const Json& j) {
  RatVec out;
  for (const Json& e : j) out.push_back(rat_from_json(e));
  return out;
}

Json poly_to_json(const LaurentPoly& p) {
  std::vector<std::pair<Exponents, Int>> sorted(p.terms().begin(), p.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  Json terms = Json::array();
  for (const auto& [e, c] : sorted) {
    Json t = Json::array();
    t.push_back(Json(e));
    t.push_back(to_ll(c));
    terms.push_back(std::move(t));
  }
  return Json{{"rendered", render(p)}, {"terms", std::move(terms)}};
}

Json polytope_to_json(const RationalPolytope& P) {
  Json verts = Json::array();
  for (const RatVec& v : P.vertices()) verts.push_back(ratvec_to_json(v));
  Json facets = Json::array();
  for (const HalfSpace& h : P.facets()) {
    Json f{{"u", ratvec_to_json(h.u)}, {"rhs", to_ll(rat_num(h.rhs))}};
    facets.push_back(std::move(f));
  }
  return Json{{"dim", P.dim()}, {"vertices", std::move(verts)}, {"facets", std::move(facets)}};
}

Json certificate_to_json(const MedleyCertificate& cert) {
  Json face_verts = Json::array();
  for (const RatVec& v : cert.face_vertices) face_verts.push_back(ratvec_to_json(v));
  Json mu = Json::array();
  for (const Rat& m : cert.mu) mu.push_back(rat_to_json(m));
  Json counts = Json::array();
  for (const Int& c : cert.block_counts) counts.push_back(to_ll(c));
  return Json{
      {"psi", cert.psi},
      {"m_star", cert.m_star},
      {"search_bound", cert.search_bound},
      {"face", Json{{"vertices", std::move(face_verts)}}},
      {"v0", Json{{"point", ratvec_to_json(cert.v0)},
                  {"cover_degree", cert.v0_degree},
                  {"provenance", cert.v0_provenance}}},
      {"mu", std::move(mu)},
      {"D", to_ll(cert.D)},
      {"block_counts", std::move(counts)},
      {"target_w", ratvec_to_json(cert.target_w)},
      {"vertex_axiom", cert.vertex_axiom},
      {"pushforward_check", cert.pushforward_check},
      {"norm_check", cert.norm_check},
  };
}

MedleyCertificate certificate_from_json(const Json& j) {
  MedleyCertificate cert;
  cert.psi = j.at("psi").get<std::vector<long long>>();
  cert.m_star = j.at("m_star").get<int>();
  cert.search_bound = j.at("search_bound").get<int>();
  for (const Json& v : j.at("face").at("vertices"))
    cert.face_vertices.push_back(ratvec_from_json(v));
  cert.v0 = ratvec_from_json(j.at("v0").at("point"));
  cert.v0_degree = j.at("v0").at("cover_degree").get<long long>();
  cert.v0_provenance = j.at("v0").at("provenance").get<std::string>();
  cert.mu = ratvec_from_json(j.at("mu"));
  cert.D = Int(j.at("D").get<long long>());
  for (const Json& c : j.at("block_counts")) cert.block_counts.emplace_back(c.get<long long>());
  cert.target_w = ratvec_from_json(j.at("target_w"));
  cert.vertex_axiom = j.at("vertex_axiom").get<bool>();
  cert.pushforward_check = j.at("pushforward_check").get<bool>();
  cert.norm_check = j.at("norm_check").get<bool>();
  return cert;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace tautcert
