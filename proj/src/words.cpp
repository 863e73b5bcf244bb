#include "lowindex/words.hpp"

#include <algorithm>
#include <array>

namespace lowindex {

Alphabet::Alphabet(std::vector<GeneratorSymbol> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].id != static_cast<int>(i)) {
      throw UsageError("generator ids must be 0..n-1 in order");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols_[j].name == symbols_[i].name) {
        throw UsageError("duplicate generator name " + symbols_[i].name);
      }
    }
  }
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

namespace {

// Number of segmentations of text[pos..] over the alphabet, saturated at 2.
int count_segmentations(std::string_view text, std::size_t pos,
                        const std::vector<GeneratorSymbol>& symbols,
                        std::vector<int>& memo) {
  if (pos == text.size()) return 1;
  if (memo[pos] >= 0) return memo[pos];
  int total = 0;
  for (const auto& s : symbols) {
    if (text.substr(pos).starts_with(s.name)) {
      std::size_t next = pos + s.name.size();
      if (!s.involution && text.substr(next).starts_with("^-1")) {
        total += count_segmentations(text, next + 3, symbols, memo);
      }
      total += count_segmentations(text, next, symbols, memo);
    }
    if (total >= 2) break;
  }
  memo[pos] = std::min(total, 2);
  return memo[pos];
}

}  // namespace

Word Alphabet::parse(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const GeneratorSymbol* best = nullptr;
    for (const auto& s : symbols_) {
      if (text.substr(pos).starts_with(s.name) &&
          (best == nullptr || s.name.size() > best->name.size())) {
        best = &s;
      }
    }
    if (best == nullptr) {
      throw ParseError("no generator matches '" + std::string(text.substr(pos)) +
                           "'",
                       pos);
    }
    pos += best->name.size();
    int exp = 1;
    if (text.substr(pos).starts_with("^-1")) {
      if (best->involution) {
        // An involution is its own inverse.
        exp = 1;
      } else {
        exp = -1;
      }
      pos += 3;
    }
    w.letters.push_back({best->id, exp});
  }
  std::vector<int> memo(text.size() + 1, -1);
  if (count_segmentations(text, 0, symbols_, memo) > 1) {
    throw ParseError("ambiguous word '" + std::string(text) + "'", 0);
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string s;
  for (const auto& l : w.letters) {
    s += symbols_.at(l.gen).name;
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word inverse(const Word& w, const Alphabet& alphabet) {
  Word r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    r.letters.push_back({it->gen, alphabet[it->gen].involution ? 1 : -it->exp});
  }
  return r;
}

Word power(const Word& w, int k) {
  Word r;
  for (int i = 0; i < k; ++i) r = concat(r, w);
  return r;
}

Word free_reduce(const Word& w, const Alphabet& alphabet) {
  Word out;
  for (Letter l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(alphabet.size())) {
      throw UsageError("letter outside the alphabet");
    }
    if (alphabet[l.gen].involution) l.exp = 1;
    if (!out.letters.empty()) {
      const Letter& last = out.letters.back();
      if (last.gen == l.gen && last.exp == -l.exp) {
        out.letters.pop_back();
        continue;
      }
      if (last.gen == l.gen && alphabet[l.gen].involution) {
        out.letters.pop_back();
        continue;
      }
    }
    out.letters.push_back(l);
  }
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::ExtendedHecke:
      return "extended_hecke";
    case Family::Hecke:
      return "hecke";
    case Family::Modular:
      return "modular";
    case Family::Picard:
      return "picard";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "extended_hecke" || name == "extended-hecke" || name == "H") {
    return Family::ExtendedHecke;
  }
  if (name == "hecke" || name == "K") return Family::Hecke;
  if (name == "modular") return Family::Modular;
  if (name == "picard") return Family::Picard;
  throw UsageError("unknown family '" + std::string(name) + "'");
}

Presentation Presentation::with_parameter(int value) const {
  if (!parameterized) throw UsageError(name + " has no parameter p");
  if (value < 3) throw UsageError("p must be at least 3");
  Presentation r = *this;
  r.p = value;
  for (auto& rel : r.relators) {
    if (rel.order.parametric) rel.order.value = value;
  }
  return r;
}

Word Presentation::expand(const Word& w) const {
  if (!reflection_alphabet) {
    throw UsageError(name + " has no reflection expansion");
  }
  Word out;
  for (const auto& l : w.letters) {
    const Word& e = reflection_expansion.at(l.gen);
    out = concat(out, l.exp > 0 ? e : inverse(e, *reflection_alphabet));
  }
  return free_reduce(out, *reflection_alphabet);
}

namespace {

Alphabet reflections_pqr() {
  return Alphabet({{0, "P", true}, {1, "Q", true}, {2, "R", true}});
}

Alphabet reflections_tetrahedral() {
  return Alphabet(
      {{0, "P'", true}, {1, "Q'", true}, {2, "R'", true}, {3, "S'", true}});
}

void check_p(HeckeParam p) {
  if (p && *p < 3) {
    throw UsageError("p must be at least 3, got " + std::to_string(*p));
  }
}

}  // namespace

Presentation extended_hecke(HeckeParam p) {
  check_p(p);
  Presentation pres;
  pres.name = "extended_hecke";
  pres.alphabet = reflections_pqr();
  pres.relators = {
      {pres.alphabet.parse("RP"), OrderSpec::finite(2)},
      {pres.alphabet.parse("QR"), OrderSpec::divides_p(p)},
  };
  pres.parameterized = true;
  pres.p = p;
  pres.reflection_alphabet = pres.alphabet;
  for (int g = 0; g < 3; ++g) pres.reflection_expansion.push_back(Word{{{g, 1}}});
  return pres;
}

Presentation hecke(HeckeParam p) {
  check_p(p);
  Presentation pres;
  pres.name = "hecke";
  pres.alphabet = Alphabet({{0, "x", false}, {1, "y", true}});
  pres.relators = {{pres.alphabet.parse("x"), OrderSpec::divides_p(p)}};
  pres.parameterized = true;
  pres.p = p;
  pres.reflection_alphabet = reflections_pqr();
  pres.reflection_expansion = {pres.reflection_alphabet->parse("QR"),
                               pres.reflection_alphabet->parse("RP")};
  return pres;
}

Presentation modular() {
  Presentation pres = hecke(3);
  pres.name = "modular";
  return pres;
}

Presentation picard() {
  Presentation pres;
  pres.name = "picard";
  pres.alphabet = Alphabet(
      {{0, "g1", true}, {1, "g2", true}, {2, "g3", true}, {3, "g4", true}});
  pres.relators = {
      {pres.alphabet.parse("g4g3g2"), OrderSpec::finite(3)},
      {pres.alphabet.parse("g2g3"), OrderSpec::finite(2)},
      {pres.alphabet.parse("g2g1"), OrderSpec::finite(3)},
      {pres.alphabet.parse("g4g3g1"), OrderSpec::finite(2)},
  };
  pres.reflection_alphabet = reflections_tetrahedral();
  const auto& t = *pres.reflection_alphabet;
  pres.reflection_expansion = {t.parse("R'P'"), t.parse("S'P'"),
                               t.parse("Q'P'Q'P'"), t.parse("Q'R'P'Q'")};
  return pres;
}

Presentation tetrahedral_coxeter() {
  Presentation pres;
  pres.name = "tetrahedral_coxeter";
  pres.alphabet = reflections_tetrahedral();
  const auto& a = pres.alphabet;
  pres.relators = {
      {a.parse("P'Q'"), OrderSpec::finite(4)},
      {a.parse("P'R'"), OrderSpec::finite(2)},
      {a.parse("P'S'"), OrderSpec::finite(2)},
      {a.parse("Q'R'"), OrderSpec::finite(4)},
      {a.parse("Q'S'"), OrderSpec::finite(2)},
      {a.parse("R'S'"), OrderSpec::finite(3)},
  };
  pres.reflection_alphabet = pres.alphabet;
  for (int g = 0; g < 4; ++g) pres.reflection_expansion.push_back(Word{{{g, 1}}});
  return pres;
}

Presentation presentation_for(Family f, HeckeParam p) {
  switch (f) {
    case Family::ExtendedHecke:
      return extended_hecke(p);
    case Family::Hecke:
      return hecke(p);
    case Family::Modular:
      if (p && *p != 3) throw UsageError("the modular family fixes p = 3");
      return modular();
    case Family::Picard:
      if (p) throw UsageError("the Picard family has no parameter p");
      return picard();
  }
  throw UsageError("unknown family");
}

PresentationPtr shared_presentation(Family f, HeckeParam p) {
  return std::make_shared<const Presentation>(presentation_for(f, p));
}

bool picard_identity_check() {
  const Presentation pic = picard();
  const Alphabet& t = *pic.reflection_alphabet;
  auto g = [&](int i, int exp) { return Word{{{i - 1, exp}}}; };
  auto expands_to = [&](std::vector<Word> factors, std::string_view target) {
    Word w;
    for (const auto& f : factors) w = concat(w, f);
    // Inverse letters expand to the reversed reflection word.
    Word flat;
    for (const auto& l : w.letters) {
      const Word& e = pic.reflection_expansion[l.gen];
      flat = concat(flat, l.exp > 0 ? e : inverse(e, t));
    }
    return free_reduce(flat, t) == free_reduce(t.parse(target), t);
  };
  return expands_to({g(2, 1), g(1, -1)}, "S'R'") &&
         expands_to({g(2, 1), g(3, -1)}, "S'Q'P'Q'") &&
         expands_to({g(4, 1), g(3, 1), g(2, -1)}, "Q'R'Q'S'") &&
         expands_to({g(4, 1), g(3, 1), g(1, -1)}, "Q'R'Q'R'");
}

std::optional<Word> hecke_word_from_reflections(const Word& reflection_word,
                                                const Presentation& hecke_pres) {
  if (!hecke_pres.reflection_alphabet || hecke_pres.alphabet.size() != 2) {
    throw UsageError("expected a Hecke presentation");
  }
  const Alphabet& pqr = *hecke_pres.reflection_alphabet;
  Word w = free_reduce(reflection_word, pqr);
  if (w.size() % 2 != 0) return std::nullopt;
  constexpr int P = 0, Q = 1, R = 2;
  constexpr int x = 0, y = 1;
  Word out;
  for (std::size_t i = 0; i < w.size(); i += 2) {
    int a = w.letters[i].gen;
    int b = w.letters[i + 1].gen;
    auto push = [&](int gen, int exp) { out.letters.push_back({gen, exp}); };
    if (a == Q && b == R) {
      push(x, 1);
    } else if (a == R && b == Q) {
      push(x, -1);
    } else if (a == R && b == P) {
      push(y, 1);
    } else if (a == P && b == R) {
      push(y, 1);
    } else if (a == Q && b == P) {
      // QP = (QR)(RP)
      push(x, 1);
      push(y, 1);
    } else if (a == P && b == Q) {
      // PQ = (PR)(RQ)
      push(y, 1);
      push(x, -1);
    }
  }
  return free_reduce(out, hecke_pres.alphabet);
}

}  // namespace lowindex
