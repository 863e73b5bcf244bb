#include "lowindex/homomorphism.hpp"

#include <numeric>

namespace lowindex {

std::string Homomorphism::to_string() const {
  std::string s;
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (g) s += ',';
    s += presentation->alphabet[static_cast<int>(g)].name + "=" +
         images[g].to_string();
  }
  return s;
}

Permutation eval(const Word& w, const Homomorphism& hom) {
  Permutation r(hom.degree());
  for (const auto& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(hom.images.size())) {
      throw UsageError("eval: letter is not a generator of " +
                       hom.presentation->name);
    }
    const Permutation& g = hom.images[l.gen];
    r = compose(r, l.exp > 0 ? g : g.inverse());
  }
  return r;
}

Homomorphism parse_assignment(std::string_view text, PresentationPtr pres,
                              int degree) {
  struct Item {
    int gen;
    std::string_view cycles;
  };
  std::vector<Item> items;
  std::size_t pos = 0;
  int max_point = 1;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected name=cycles", pos);
    }
    std::string_view name = part.substr(0, eq);
    std::optional<int> gen = pres->alphabet.find(name);
    if (!gen && pres->alphabet.size() == 2 && pres->reflection_alphabet) {
      if (name == "QR") gen = 0;
      if (name == "RP") gen = 1;
      if (name == "QP") gen = -1;  // derived column, checked by callers
    }
    if (!gen) {
      throw ParseError("unknown generator '" + std::string(name) + "'", pos);
    }
    std::string_view cycles = part.substr(eq + 1);
    for (char c : cycles) {
      if (c >= '1' && c <= '9') max_point = std::max(max_point, c - '0');
    }
    if (*gen >= 0) items.push_back({*gen, cycles});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  int n = degree == 0 ? max_point : degree;
  Homomorphism hom{pres, std::vector<Permutation>(pres->alphabet.size(),
                                                  Permutation(n)),
                   std::nullopt};
  for (const auto& item : items) {
    hom.images[item.gen] = Permutation::parse(item.cycles, n);
  }
  hom.divisibility = parametric_divisibility(hom);
  return hom;
}

std::optional<int> parametric_divisibility(const Homomorphism& hom) {
  if (!hom.presentation->parameterized) return std::nullopt;
  int d = 1;
  for (const auto& rel : hom.presentation->relators) {
    if (rel.order.parametric) d = std::lcm(d, eval(rel.word, hom).order());
  }
  return d;
}

bool is_valid(const Homomorphism& hom) {
  const auto& pres = *hom.presentation;
  for (std::size_t g = 0; g < hom.images.size(); ++g) {
    if (pres.alphabet[static_cast<int>(g)].involution &&
        hom.images[g].order() > 2) {
      return false;
    }
  }
  for (const auto& rel : pres.relators) {
    if (!rel.order.value) continue;  // symbolic: recorded, not checked
    if (*rel.order.value % eval(rel.word, hom).order() != 0) return false;
  }
  return is_transitive(hom.images, hom.degree());
}

}  // namespace lowindex
