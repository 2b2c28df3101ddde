// Exact arithmetic in Z[H] for a free lattice H of rank b, and in
// Z[t,t^-1] as the rank-1 case. Polynomials are finitely supported maps
// from exponent vectors to nonzero integer coefficients; the unit group
// is {+-monomial}. Canonical forms pin down representatives of unit
// orbits, which makes equality-up-to-units decidable.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautcert/error.hpp"
#include "tautcert/numeric.hpp"

namespace tautcert {

// Lattice exponent vector; length equals the rank of the parent polynomial.
using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic with
// earlier coordinates more significant.
bool grlex_less(const Exponents& a, const Exponents& b);

class LaurentPoly {
 public:
  explicit LaurentPoly(int rank);

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, const Int& c);
  static LaurentPoly monomial(int rank, const Exponents& e, const Int& c = 1);
  // x_index^power as a rank-`rank` monomial.
  static LaurentPoly variable(int rank, int index, int power = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of e (zero if absent).
  Int coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Int& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Int& s) { return a *= s; }
  friend LaurentPoly operator*(const Int& s, LaurentPoly a) { return a *= s; }

  bool operator==(const LaurentPoly& other) const = default;

  // Componentwise minimum / maximum of exponents over the support.
  // Precondition: nonzero polynomial.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  // Greatest term in graded-lex order. Precondition: nonzero.
  std::pair<Exponents, Int> leading_term() const;

  LaurentPoly pow(int k) const;  // k >= 0

 private:
  void check_same_rank(const LaurentPoly& other) const;

  int rank_;
  std::map<Exponents, Int> terms_;
};

// Rational covector on the exponent lattice; entries with denominator 1
// represent integral cohomology classes.
class Covector {
 public:
  explicit Covector(RatVec entries) : entries_(std::move(entries)) {}
  static Covector integral(const std::vector<long long>& entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  const RatVec& entries() const { return entries_; }

  bool is_integral() const;
  // Integral with entry gcd 1 (and nonzero).
  bool is_primitive() const;

  Rat pair(const Exponents& e) const;
  long long pair_int(const Exponents& e) const;

  bool operator==(const Covector& other) const = default;

 private:
  RatVec entries_;
};

// Unique representative of the unit orbit {+-monomial * p}: support shifted
// so the componentwise-minimum exponent is zero, sign fixed so the
// graded-lex greatest term has positive coefficient. The zero polynomial is
// its own canonical form. Integer content is kept.
class CanonicalForm {
 public:
  explicit CanonicalForm(const LaurentPoly& p);

  const LaurentPoly& poly() const { return poly_; }
  int rank() const { return poly_.rank(); }
  bool is_zero() const { return poly_.is_zero(); }

  // Gcd of the coefficients (0 for the zero polynomial).
  Int content() const;

  bool operator==(const CanonicalForm& other) const = default;

 private:
  LaurentPoly poly_;
};

CanonicalForm canonicalize(const LaurentPoly& p);

// True iff p = u*q for a unit u = +-monomial.
bool doteq_equal(const LaurentPoly& p, const LaurentPoly& q);

// Gcd in the UFD of integer Laurent polynomials, integer content included,
// returned canonicalized. laurent_gcd(p, 0) = canonicalize(p).
LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);

// Exact quotient p/q in the Laurent ring, or nullopt when q does not
// divide p. q must be nonzero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q);

// Rank-1 image of p under the ring map h -> t^{psi(h)}. psi must be
// integral and of matching rank; cancellation is permitted.
LaurentPoly specialize(const LaurentPoly& p, const Covector& psi);

// Support width of p under alpha: max |alpha(h_i) - alpha(h_j)| over the
// support, zero for the zero polynomial.
Rat deg_alpha(const LaurentPoly& p, const Covector& alpha);

// Topmost minus bottommost exponent of a rank-1 polynomial; zero for the
// zero polynomial.
int floating_degree(const LaurentPoly& p);

// Terms sorted graded-lex descending: "t^2 - 2*t + 1", "x1^2*x2^-1 - x2".
std::string render(const LaurentPoly& p);
inline std::string render(const CanonicalForm& c) { return render(c.poly()); }

}  // namespace tautcert
