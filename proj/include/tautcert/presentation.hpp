// Finite group presentations: parsing, integral homology through Smith
// normal form, free abelianization maps, and presentations of finite
// cyclic covers by Reidemeister-Schreier rewriting.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tautcert/laurent.hpp"
#include "tautcert/linalg.hpp"
#include "tautcert/numeric.hpp"

namespace tautcert {

struct Letter {
  int gen = 0;   // generator index in the parent presentation
  int exp = 0;   // nonzero
  bool operator==(const Letter&) const = default;
};

// Freely reduced word: adjacent letters with equal generator are merged,
// no zero exponents.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(int gen, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const;  // sum of |exp|

  Word inverse() const;
  Word& append(int gen, int exp);
  Word& append(const Word& other);
  Word pow(int k) const;
  Word cyclic_rotate(int positions) const;  // rotate by single letters

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(generators_.size()); }
  int relator_count() const { return static_cast<int>(relators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  int generator_index(const std::string& name) const;  // -1 if absent

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// Line-oriented format: '#' comments, one `gens` line with identifiers,
// `rel` lines of tokens `name` or `name^k` (k nonzero). Errors carry line
// numbers.
Presentation parse_presentation(const std::string& text);
Word parse_word(const std::string& text, const Presentation& pres, int line_no = 0);

struct AbelianizationData {
  int b = 0;                  // free rank of H1
  std::vector<Int> torsion;   // divisor chain, each > 1
  IntMat free_map;            // b x g, generator -> coordinates in H

  // Image of a generator in H as a lattice vector.
  Exponents generator_image(int gen) const;
  // Monomial image of a generator in Z[H].
  LaurentPoly generator_monomial(int gen) const;
  // Image of a word under the composite free abelianization.
  Exponents word_image(const Word& w) const;
};

AbelianizationData homology(const Presentation& P);

// Value of psi (a covector on H) on each generator.
std::vector<long long> psi_on_generators(const Presentation& P,
                                         const AbelianizationData& ab,
                                         const Covector& psi);

// Presentation of the kernel of (psi mod m) composed with the free
// abelianization, by Reidemeister-Schreier rewriting over a transversal of
// powers of one generator (or greedy products when no single generator has
// psi-value coprime to m). m = 1 returns P.
Presentation cyclic_cover_presentation(const Presentation& P, const Covector& psi,
                                       int m);

int betti_of_cyclic_cover(const Presentation& P, const Covector& psi, int m);

}  // namespace tautcert
