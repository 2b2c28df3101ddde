// Exact arithmetic primitives shared across the library.
//
// All computations in this project are exact: integers are arbitrary
// precision and rationals are normalized fractions. Nothing here ever
// touches floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tautcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

std::string rat_to_string(const Rat& r);

// Parses "3", "-4/5". Throws Error{bad_argument} on malformed input.
Rat parse_rational(const std::string& text);

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace tautcert
