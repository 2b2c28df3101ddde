// JSON serialization used by the CLI and by report re-validation. All
// rationals are [numerator, denominator] integer pairs; polynomials are
// emitted both rendered and as graded-lex-descending term lists.
#pragma once

#include <json.hpp>

#include <string>

#include "tautcert/laurent.hpp"
#include "tautcert/medley.hpp"
#include "tautcert/polytope.hpp"

namespace tautcert {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const Json& j);

Json poly_to_json(const LaurentPoly& p);
inline Json poly_to_json(const CanonicalForm& c) { return poly_to_json(c.poly()); }

Json polytope_to_json(const RationalPolytope& P);

Json certificate_to_json(const MedleyCertificate& cert);
MedleyCertificate certificate_from_json(const Json& j);

// FNV-1a 64-bit digest, hex encoded; used for input digests in reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace tautcert
