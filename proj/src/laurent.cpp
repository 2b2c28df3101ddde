#include "tautcert/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tautcert {

bool grlex_less(const Exponents& a, const Exponents& b) {
  long long da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da < db;
  // Earlier coordinates dominate: a < b iff at the first difference a has
  // the smaller entry.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
  if (rank < 0) fail(ErrorCode::bad_argument, "polynomial rank must be >= 0");
}

LaurentPoly LaurentPoly::constant(int rank, const Int& c) {
  LaurentPoly p(rank);
  if (c != 0) p.terms_[Exponents(rank, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != rank)
    fail(ErrorCode::rank_mismatch, "exponent vector length does not match rank");
  LaurentPoly p(rank);
  if (c != 0) p.terms_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int index, int power) {
  if (index < 0 || index >= rank)
    fail(ErrorCode::bad_argument, "variable index out of range");
  Exponents e(rank, 0);
  e[index] = power;
  return monomial(rank, e, 1);
}

Int LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != rank_)
    fail(ErrorCode::rank_mismatch, "exponent vector length does not match rank");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

void LaurentPoly::check_same_rank(const LaurentPoly& other) const {
  if (rank_ != other.rank_)
    fail(ErrorCode::rank_mismatch, "polynomial ranks differ");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(rank_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same_rank(other);
  for (const auto& [e, c] : other.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same_rank(other);
  for (const auto& [e, c] : other.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_rank(b);
  LaurentPoly out(a.rank_);
  Exponents e(a.rank_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Exponents LaurentPoly::min_exponents() const {
  if (is_zero()) fail(ErrorCode::zero_polynomial, "zero polynomial has no support");
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  if (is_zero()) fail(ErrorCode::zero_polynomial, "zero polynomial has no support");
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

std::pair<Exponents, Int> LaurentPoly::leading_term() const {
  if (is_zero()) fail(ErrorCode::zero_polynomial, "zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (grlex_less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) fail(ErrorCode::bad_argument, "negative power of a polynomial");
  LaurentPoly result = constant(rank_, 1);
  for (int i = 0; i < k; ++i) result = result * (*this);
  return result;
}

Covector Covector::integral(const std::vector<long long>& entries) {
  RatVec v;
  v.reserve(entries.size());
  for (long long x : entries) v.emplace_back(x);
  return Covector(std::move(v));
}

bool Covector::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rat& r) { return is_integer(r); });
}

bool Covector::is_primitive() const {
  if (!is_integral()) return false;
  Int g = 0;
  for (const Rat& r : entries_) g = int_gcd(g, rat_num(r));
  return g == 1;
}

Rat Covector::pair(const Exponents& e) const {
  if (e.size() != entries_.size())
    fail(ErrorCode::rank_mismatch, "covector rank does not match exponent vector");
  Rat s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += entries_[i] * e[i];
  return s;
}

long long Covector::pair_int(const Exponents& e) const {
  Rat s = pair(e);
  if (!is_integer(s)) fail(ErrorCode::not_integral, "pairing is not an integer");
  return static_cast<long long>(rat_num(s));
}

CanonicalForm::CanonicalForm(const LaurentPoly& p) : poly_(p.rank()) {
  if (p.is_zero()) return;
  Exponents shift = p.min_exponents();
  LaurentPoly shifted(p.rank());
  Exponents e(p.rank());
  for (const auto& [ep, c] : p.terms()) {
    for (int i = 0; i < p.rank(); ++i) e[i] = ep[i] - shift[i];
    shifted.set_coeff(e, c);
  }
  if (shifted.leading_term().second < 0) shifted *= Int(-1);
  poly_ = std::move(shifted);
}

Int CanonicalForm::content() const {
  Int g = 0;
  for (const auto& [e, c] : poly_.terms()) g = int_gcd(g, c);
  return g;
}

CanonicalForm canonicalize(const LaurentPoly& p) { return CanonicalForm(p); }

bool doteq_equal(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.rank() != q.rank()) fail(ErrorCode::rank_mismatch, "polynomial ranks differ");
  return CanonicalForm(p) == CanonicalForm(q);
}

namespace {

// Gcd internals work on support-shifted polynomials (all exponents >= 0),
// viewing rank-r polynomials as univariate in the last variable with
// rank-(r-1) coefficients, and running a primitive pseudo-remainder
// sequence. Units are irrelevant: the public entry point canonicalizes.

// Splits p (nonneg exponents) into coefficients of powers of the last
// variable, each of rank one less.
std::map<int, LaurentPoly> split_last(const LaurentPoly& p) {
  std::map<int, LaurentPoly> out;
  int r = p.rank();
  for (const auto& [e, c] : p.terms()) {
    Exponents head(e.begin(), e.end() - 1);
    auto [it, inserted] = out.try_emplace(e.back(), r - 1);
    it->second.set_coeff(head, c);
  }
  return out;
}

LaurentPoly join_last(const std::map<int, LaurentPoly>& coeffs, int rank) {
  LaurentPoly p(rank);
  for (const auto& [deg, coeff] : coeffs) {
    for (const auto& [e, c] : coeff.terms()) {
      Exponents full = e;
      full.push_back(deg);
      p.set_coeff(full, c);
    }
  }
  return p;
}

LaurentPoly raise_rank(const LaurentPoly& p) {
  LaurentPoly out(p.rank() + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents full = e;
    full.push_back(0);
    out.set_coeff(full, c);
  }
  return out;
}

LaurentPoly shift_nonneg(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents shift = p.min_exponents();
  LaurentPoly out(p.rank());
  Exponents e(p.rank());
  for (const auto& [ep, c] : p.terms()) {
    for (int i = 0; i < p.rank(); ++i) e[i] = ep[i] - shift[i];
    out.set_coeff(e, c);
  }
  return out;
}

LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b);

// Gcd of the coefficients of p in its last variable.
LaurentPoly content_last(const std::map<int, LaurentPoly>& coeffs, int rank) {
  LaurentPoly g(rank - 1);
  for (const auto& [deg, coeff] : coeffs) {
    g = gcd_impl(g, coeff);
    if (g.term_count() == 1 && g.terms().begin()->second == 1 &&
        g.terms().begin()->first == Exponents(rank - 1, 0))
      break;
  }
  return g;
}

LaurentPoly divide_exact_unchecked(const LaurentPoly& p, const LaurentPoly& q) {
  auto quotient = exact_divide(p, q);
  if (!quotient)
    fail(ErrorCode::division_not_exact, "internal gcd division was not exact");
  return *quotient;
}

// Primitive PRS gcd for rank >= 1, inputs with nonneg exponents.
LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return shift_nonneg(b);
  if (b.is_zero()) return shift_nonneg(a);
  int r = a.rank();
  if (r == 0) {
    return LaurentPoly::constant(0, int_gcd(a.terms().begin()->second,
                                            b.terms().begin()->second));
  }

  auto ca = split_last(shift_nonneg(a));
  auto cb = split_last(shift_nonneg(b));
  LaurentPoly cont_a = content_last(ca, r);
  LaurentPoly cont_b = content_last(cb, r);
  LaurentPoly cont_gcd = raise_rank(gcd_impl(cont_a, cont_b));

  // Primitive parts as univariate polynomials in the last variable.
  LaurentPoly pa = divide_exact_unchecked(join_last(ca, r), raise_rank(cont_a));
  LaurentPoly pb = divide_exact_unchecked(join_last(cb, r), raise_rank(cont_b));

  auto degree_last = [](const LaurentPoly& p) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e.back());
    return d;
  };
  auto lc_last = [r](const LaurentPoly& p, int deg) {
    LaurentPoly lc(r - 1);
    for (const auto& [e, c] : p.terms())
      if (e.back() == deg) lc.set_coeff(Exponents(e.begin(), e.end() - 1), c);
    return lc;
  };
  auto primitive_part = [r](const LaurentPoly& p) {
    if (p.is_zero()) return p;
    auto coeffs = split_last(shift_nonneg(p));
    LaurentPoly cont = content_last(coeffs, r);
    return divide_exact_unchecked(join_last(coeffs, r), raise_rank(cont));
  };

  LaurentPoly u = pa, v = pb;
  if (degree_last(u) < degree_last(v)) std::swap(u, v);
  while (!v.is_zero()) {
    // Pseudo-remainder of u by v in the last variable.
    int dv = degree_last(v);
    LaurentPoly lcv = raise_rank(lc_last(v, dv));
    LaurentPoly rem = u;
    while (!rem.is_zero() && degree_last(rem) >= dv) {
      int dr = degree_last(rem);
      LaurentPoly lcr = raise_rank(lc_last(rem, dr));
      LaurentPoly shift_mono =
          LaurentPoly::variable(r, r - 1, dr - dv);
      rem = rem * lcv - v * shift_mono * lcr;
    }
    u = v;
    v = primitive_part(rem);
  }
  return cont_gcd * primitive_part(u);
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.rank() != q.rank()) fail(ErrorCode::rank_mismatch, "polynomial ranks differ");
  if (p.is_zero() && q.is_zero()) return LaurentPoly::zero(p.rank());
  return canonicalize(gcd_impl(shift_nonneg(p), shift_nonneg(q))).poly();
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.rank() != q.rank()) fail(ErrorCode::rank_mismatch, "polynomial ranks differ");
  if (q.is_zero()) fail(ErrorCode::bad_argument, "division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly::zero(p.rank());

  // Shift both to nonneg support. In an integral domain componentwise
  // minimum exponents add under multiplication, so the quotient of the
  // shifted pair is an honest polynomial; the unit correction is applied
  // at the end.
  Exponents sp = p.min_exponents(), sq = q.min_exponents();
  LaurentPoly a = shift_nonneg(p), b = shift_nonneg(q);
  auto [eb, cb] = b.leading_term();

  LaurentPoly quot(p.rank());
  while (!a.is_zero()) {
    auto [ea, ca] = a.leading_term();
    Exponents diff(p.rank());
    for (int i = 0; i < p.rank(); ++i) {
      diff[i] = ea[i] - eb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    if (ca % cb != 0) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(p.rank(), diff, ca / cb);
    quot += t;
    a -= t * b;
  }

  Exponents unit(p.rank());
  for (int i = 0; i < p.rank(); ++i) unit[i] = sp[i] - sq[i];
  return quot * LaurentPoly::monomial(p.rank(), unit, 1);
}

LaurentPoly specialize(const LaurentPoly& p, const Covector& psi) {
  if (psi.rank() != p.rank()) fail(ErrorCode::rank_mismatch, "covector rank mismatch");
  if (!psi.is_integral())
    fail(ErrorCode::not_integral, "specialization requires an integral class");
  LaurentPoly out(1);
  for (const auto& [e, c] : p.terms()) {
    long long d = psi.pair_int(e);
    if (d < -1000000 || d > 1000000)
      fail(ErrorCode::bad_argument, "specialized exponent out of range");
    Exponents te{static_cast<int>(d)};
    out.set_coeff(te, out.coeff(te) + c);
  }
  return out;
}

Rat deg_alpha(const LaurentPoly& p, const Covector& alpha) {
  if (alpha.rank() != p.rank()) fail(ErrorCode::rank_mismatch, "covector rank mismatch");
  if (p.is_zero()) return Rat(0);
  bool first = true;
  Rat lo = 0, hi = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat v = alpha.pair(e);
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo;
}

int floating_degree(const LaurentPoly& p) {
  if (p.rank() != 1) fail(ErrorCode::rank_mismatch, "floating degree needs rank 1");
  if (p.is_zero()) return 0;
  return p.max_exponents()[0] - p.min_exponents()[0];
}

namespace {

std::string render_monomial(const Exponents& e, int rank) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < rank; ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    if (rank == 1)
      os << "t";
    else
      os << "x" << (i + 1);
    if (e[i] != 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : std::string();
}

}  // namespace

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Int>> sorted(p.terms().begin(), p.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Int a = int_abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = render_monomial(e, p.rank());
    if (mono.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace tautcert
