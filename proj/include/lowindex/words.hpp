#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowindex/errors.hpp"

namespace lowindex {

/// Concrete value of the Hecke parameter p, or symbolic when empty.
using HeckeParam = std::optional<int>;

struct GeneratorSymbol {
  int id = 0;
  std::string name;
  bool involution = false;
};

/// One letter of a word: generator id and exponent ±1. Involution letters
/// always carry +1.
struct Letter {
  int gen = 0;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Ordered set of generator symbols. Word text is the concatenation of
/// generator names, with a trailing "^-1" on inverse non-involution letters.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<GeneratorSymbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const GeneratorSymbol& operator[](int id) const { return symbols_.at(id); }
  const std::vector<GeneratorSymbol>& symbols() const { return symbols_; }
  std::optional<int> find(std::string_view name) const;

  /// Greedy longest-match parse. Rejects text where two different
  /// segmentations exist.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

 private:
  std::vector<GeneratorSymbol> symbols_;
};

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w, const Alphabet& alphabet);
Word power(const Word& w, int k);

/// Cancels adjacent x·x⁻¹ pairs and, for involution letters, adjacent equal
/// letters, until no cancellation remains.
Word free_reduce(const Word& w, const Alphabet& alphabet);

/// Order attached to a relator word: (word)^m = e for a fixed m, or
/// (word)^p for the family parameter. When the parameter is concrete,
/// `value` holds p and `parametric` stays set.
struct OrderSpec {
  std::optional<int> value;
  bool parametric = false;

  static OrderSpec finite(int m) { return {m, false}; }
  static OrderSpec divides_p(HeckeParam p) { return {p, true}; }
  bool symbolic() const { return !value.has_value(); }
};

struct Relator {
  Word word;
  OrderSpec order;
};

enum class Family { ExtendedHecke, Hecke, Modular, Picard };

std::string family_name(Family f);
Family parse_family(std::string_view name);

struct Presentation {
  std::string name;
  Alphabet alphabet;
  std::vector<Relator> relators;
  /// True for families parameterized by p; `p` is then the concrete value
  /// or empty for symbolic.
  bool parameterized = false;
  HeckeParam p;
  /// Expansion of each generator over a reflection alphabet, when the
  /// family has one (P, Q, R for the Hecke families; P', Q', R', S' for
  /// Picard).
  std::optional<Alphabet> reflection_alphabet;
  std::vector<Word> reflection_expansion;

  Word parse(std::string_view text) const { return alphabet.parse(text); }
  std::string format(const Word& w) const { return alphabet.format(w); }

  /// Same generators and relators with the parameter fixed to `value`.
  Presentation with_parameter(int value) const;

  /// Rewrites a word over the generators into the reflection alphabet.
  Word expand(const Word& w) const;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// P, Q, R involutions with (RP)^2 and (QR)^p; QP has infinite order.
Presentation extended_hecke(HeckeParam p);
/// x = QR of order p, y = RP of order 2, no further relators.
Presentation hecke(HeckeParam p);
Presentation modular();
/// Involutions g1 = R'P', g2 = S'P', g3 = Q'P'Q'P', g4 = Q'R'P'Q' with
/// (g4 g3 g2)^3, (g2 g3)^2, (g2 g1)^3, (g4 g3 g1)^2.
Presentation picard();
/// Reflection group of the tetrahedron with Coxeter exponents
/// m(P',Q')=4, m(P',R')=2, m(P',S')=2, m(Q',R')=4, m(Q',S')=2, m(R',S')=3.
Presentation tetrahedral_coxeter();

Presentation presentation_for(Family f, HeckeParam p);
PresentationPtr shared_presentation(Family f, HeckeParam p);

/// Confirms the four derived Picard identities by free reduction over
/// P', Q', R', S': g2 g1⁻¹ = S'R', g2 g3⁻¹ = S'Q'P'Q', g4 g3 g2⁻¹ = Q'R'Q'S',
/// g4 g3 g1⁻¹ = Q'R'Q'R'.
bool picard_identity_check();

/// Even-length words over P, Q, R rewritten over the Hecke generators x = QR,
/// y = RP. Returns nothing for odd words (orientation-reversing, not in K).
std::optional<Word> hecke_word_from_reflections(const Word& reflection_word,
                                                const Presentation& hecke_pres);

}  // namespace lowindex
