#include "tautcert/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tautcert/error.hpp"

namespace tautcert {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) append(l.gen, l.exp);
}

Word Word::generator(int gen, int exp) {
  Word w;
  w.append(gen, exp);
  return w;
}

int Word::length() const {
  int n = 0;
  for (const Letter& l : letters_) n += std::abs(l.exp);
  return n;
}

Word& Word::append(int gen, int exp) {
  if (exp == 0) return *this;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return *this;
  }
  letters_.push_back({gen, exp});
  return *this;
}

Word& Word::append(const Word& other) {
  for (const Letter& l : other.letters_) append(l.gen, l.exp);
  return *this;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.append(it->gen, -it->exp);
  return w;
}

Word Word::pow(int k) const {
  Word w;
  const Word base = k >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(k); ++i) w.append(base);
  return w;
}

Word Word::cyclic_rotate(int positions) const {
  // Flatten to single letters, rotate, and re-reduce.
  std::vector<Letter> flat;
  for (const Letter& l : letters_) {
    int step = l.exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(l.exp); ++i) flat.push_back({l.gen, step});
  }
  if (flat.empty()) return Word();
  int n = static_cast<int>(flat.size());
  int shift = ((positions % n) + n) % n;
  std::rotate(flat.begin(), flat.begin() + shift, flat.end());
  return Word(std::move(flat));
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  for (const Word& r : relators_)
    for (const Letter& l : r.letters())
      if (l.gen < 0 || l.gen >= generator_count())
        fail(ErrorCode::undeclared_generator, "relator references unknown generator");
}

int Presentation::generator_index(const std::string& name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (generators_[i] == name) return i;
  return -1;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Letter parse_letter(const std::string& token,
                    const std::vector<std::string>& gens, int line_no) {
  std::string name = token;
  int exp = 1;
  auto caret = token.find('^');
  if (caret != std::string::npos) {
    name = token.substr(0, caret);
    std::string exp_str = token.substr(caret + 1);
    try {
      std::size_t used = 0;
      exp = std::stoi(exp_str, &used);
      if (used != exp_str.size()) throw std::invalid_argument(exp_str);
    } catch (const std::exception&) {
      fail(ErrorCode::malformed_exponent,
           "line " + std::to_string(line_no) + ": malformed exponent token '" + token + "'");
    }
    if (exp == 0)
      fail(ErrorCode::malformed_exponent,
           "line " + std::to_string(line_no) + ": zero exponent in '" + token + "'");
  }
  auto it = std::find(gens.begin(), gens.end(), name);
  if (it == gens.end())
    fail(ErrorCode::undeclared_generator,
         "line " + std::to_string(line_no) + ": undeclared generator '" + name + "'");
  return {static_cast<int>(it - gens.begin()), exp};
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<Word> relators;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens[0] == "gens") {
      if (have_gens)
        fail(ErrorCode::parse_error,
             "line " + std::to_string(line_no) + ": duplicate gens line");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_identifier(tokens[i]))
          fail(ErrorCode::parse_error, "line " + std::to_string(line_no) +
                                           ": invalid identifier '" + tokens[i] + "'");
        if (std::find(gens.begin(), gens.end(), tokens[i]) != gens.end())
          fail(ErrorCode::duplicate_generator,
               "line " + std::to_string(line_no) + ": duplicate generator '" +
                   tokens[i] + "'");
        gens.push_back(tokens[i]);
      }
      have_gens = true;
    } else if (tokens[0] == "rel") {
      Word w;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        Letter l = parse_letter(tokens[i], gens, line_no);
        w.append(l.gen, l.exp);
      }
      relators.push_back(std::move(w));
    } else {
      fail(ErrorCode::parse_error, "line " + std::to_string(line_no) +
                                       ": unknown directive '" + tokens[0] + "'");
    }
  }
  return Presentation(std::move(gens), std::move(relators));
}

Word parse_word(const std::string& text, const Presentation& pres, int line_no) {
  Word w;
  for (const std::string& tok : tokenize(strip_comment(text))) {
    Letter l = parse_letter(tok, pres.generators(), line_no);
    w.append(l.gen, l.exp);
  }
  return w;
}

Exponents AbelianizationData::generator_image(int gen) const {
  Exponents e(b, 0);
  for (int i = 0; i < b; ++i) {
    const Int& v = free_map[i][gen];
    e[i] = static_cast<int>(v);
  }
  return e;
}

LaurentPoly AbelianizationData::generator_monomial(int gen) const {
  return LaurentPoly::monomial(b, generator_image(gen), 1);
}

Exponents AbelianizationData::word_image(const Word& w) const {
  Exponents e(b, 0);
  for (const Letter& l : w.letters()) {
    Exponents g = generator_image(l.gen);
    for (int i = 0; i < b; ++i) e[i] += g[i] * l.exp;
  }
  return e;
}

AbelianizationData homology(const Presentation& P) {
  int g = P.generator_count();
  int n = P.relator_count();
  // Rows = generators, columns = relator exponent sums.
  IntMat A(g, IntVec(std::max(n, 1), 0));
  for (int j = 0; j < n; ++j)
    for (const Letter& l : P.relators()[j].letters()) A[l.gen][j] += l.exp;
  if (n == 0) A.assign(g, IntVec(1, 0));

  SmithResult s = smith_normal_form(A);
  AbelianizationData out;
  out.b = g - s.rank;
  for (int i = 0; i < s.rank; ++i)
    if (s.diag[i] > 1) out.torsion.push_back(s.diag[i]);
  out.free_map.assign(out.b, IntVec(g, 0));
  for (int i = 0; i < out.b; ++i)
    for (int j = 0; j < g; ++j) out.free_map[i][j] = s.U[s.rank + i][j];
  return out;
}

std::vector<long long> psi_on_generators(const Presentation& P,
                                         const AbelianizationData& ab,
                                         const Covector& psi) {
  if (psi.rank() != ab.b) fail(ErrorCode::rank_mismatch, "psi rank does not match b1");
  if (!psi.is_integral()) fail(ErrorCode::not_integral, "psi must be integral");
  std::vector<long long> values(P.generator_count());
  for (int j = 0; j < P.generator_count(); ++j)
    values[j] = psi.pair_int(ab.generator_image(j));
  return values;
}

namespace {

long long mod_norm(long long v, int m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

// Schreier transversal as words indexed by residue class.
std::vector<Word> schreier_transversal(const std::vector<long long>& psi_vals, int m) {
  int g = static_cast<int>(psi_vals.size());
  // Preferred: powers of the first generator with psi-value coprime to m.
  for (int j = 0; j < g; ++j) {
    long long v = mod_norm(psi_vals[j], m);
    if (std::gcd(v, static_cast<long long>(m)) == 1) {
      std::vector<Word> reps(m);
      for (int k = 0; k < m; ++k) reps[mod_norm(v * k, m)] = Word::generator(j, 1).pow(k);
      return reps;
    }
  }
  // Greedy fallback: breadth-first products of positive generator letters.
  // The BFS tree keeps the transversal prefix-closed.
  std::vector<Word> reps(m);
  std::vector<bool> seen(m, false);
  seen[0] = true;
  std::vector<int> queue{0};
  std::size_t head = 0;
  while (head < queue.size()) {
    int r = queue[head++];
    for (int j = 0; j < g; ++j) {
      int nr = static_cast<int>(mod_norm(r + psi_vals[j], m));
      if (seen[nr]) continue;
      seen[nr] = true;
      reps[nr] = reps[r];
      reps[nr].append(j, 1);
      queue.push_back(nr);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
    fail(ErrorCode::not_primitive, "psi does not reach every residue class mod m");
  return reps;
}

}  // namespace

Presentation cyclic_cover_presentation(const Presentation& P, const Covector& psi,
                                       int m) {
  if (m < 1) fail(ErrorCode::bad_argument, "cover degree must be >= 1");
  AbelianizationData ab = homology(P);
  bool zero = std::all_of(psi.entries().begin(), psi.entries().end(),
                          [](const Rat& r) { return r == 0; });
  if (zero) fail(ErrorCode::zero_class, "psi is zero");
  if (!psi.is_primitive()) fail(ErrorCode::not_primitive, "psi is not primitive");
  if (m == 1) return P;

  int g = P.generator_count();
  std::vector<long long> vals = psi_on_generators(P, ab, psi);
  std::vector<Word> reps = schreier_transversal(vals, m);

  // Schreier generator gamma(residue r, generator j) = rep_r x_j rep_{r+v_j}^{-1}.
  // Trivial ones (where the word freely reduces to nothing) are omitted.
  std::vector<std::vector<int>> schreier_index(m, std::vector<int>(g, -1));
  std::vector<std::string> cover_gens;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < g; ++j) {
      int target = static_cast<int>(mod_norm(r + vals[j], m));
      Word gamma = reps[r];
      gamma.append(j, 1);
      gamma.append(reps[target].inverse());
      if (gamma.empty()) continue;
      schreier_index[r][j] = static_cast<int>(cover_gens.size());
      cover_gens.push_back(P.generators()[j] + "_" + std::to_string(r));
    }
  }

  // Rewrite each relator starting at each coset.
  std::vector<Word> cover_rels;
  cover_rels.reserve(static_cast<std::size_t>(m) * P.relator_count());
  for (int r = 0; r < m; ++r) {
    for (const Word& rel : P.relators()) {
      Word rewritten;
      int state = r;
      for (const Letter& l : rel.letters()) {
        int step = l.exp > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(l.exp); ++i) {
          if (step > 0) {
            int idx = schreier_index[state][l.gen];
            if (idx >= 0) rewritten.append(idx, 1);
            state = static_cast<int>(mod_norm(state + vals[l.gen], m));
          } else {
            state = static_cast<int>(mod_norm(state - vals[l.gen], m));
            int idx = schreier_index[state][l.gen];
            if (idx >= 0) rewritten.append(idx, -1);
          }
        }
      }
      if (!rewritten.empty()) cover_rels.push_back(std::move(rewritten));
    }
  }

  return Presentation(std::move(cover_gens), std::move(cover_rels));
}

int betti_of_cyclic_cover(const Presentation& P, const Covector& psi, int m) {
  return homology(cyclic_cover_presentation(P, psi, m)).b;
}

}  // namespace tautcert
