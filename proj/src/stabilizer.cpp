#include "lowindex/stabilizer.hpp"

#include <algorithm>

#include "lowindex/orbifold.hpp"

namespace lowindex {

int Transversal::color_of(const Word& w, const Homomorphism& hom) {
  return eval(w, hom).inverse()(1);
}

namespace {

std::vector<Letter> search_letters(const Alphabet& alphabet) {
  std::vector<Letter> letters;
  for (const auto& s : alphabet.symbols()) {
    letters.push_back({s.id, 1});
    if (!s.involution) letters.push_back({s.id, -1});
  }
  return letters;
}

}  // namespace

Transversal schreier_transversal(const Homomorphism& hom) {
  const int n = hom.degree();
  if (!is_transitive(hom.images, n)) {
    throw UsageError("schreier_transversal: assignment is not transitive");
  }
  const Alphabet& alphabet = hom.presentation->alphabet;
  const auto letters = search_letters(alphabet);

  std::vector<std::optional<Word>> found(n);
  found[0] = Word{};
  std::vector<int> queue{1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[head];
    for (const auto& l : letters) {
      const Permutation& g = hom.image(l.gen);
      const int j = (l.exp > 0 ? g.inverse() : g)(i);
      if (found[j - 1]) continue;
      Word w = *found[i - 1];
      w.letters.push_back(l);
      found[j - 1] = std::move(w);
      queue.push_back(j);
    }
  }
  Transversal t;
  for (auto& w : found) t.words.push_back(std::move(*w));
  return t;
}

std::vector<Word> schreier_generators(const Homomorphism& hom) {
  const Transversal t = schreier_transversal(hom);
  const Alphabet& alphabet = hom.presentation->alphabet;
  std::vector<Word> gens;
  auto present = [&](const Word& w) {
    return std::find(gens.begin(), gens.end(), w) != gens.end();
  };
  for (const Word& rep_word : t.words) {
    for (const auto& s : alphabet.symbols()) {
      Word tg = rep_word;
      tg.letters.push_back({s.id, 1});
      const Word& back = t.rep(Transversal::color_of(tg, hom));
      Word g = free_reduce(concat(tg, inverse(back, alphabet)), alphabet);
      if (g.empty() || present(g) ||
          present(free_reduce(inverse(g, alphabet), alphabet))) {
        continue;
      }
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

std::vector<Word> fundamental_region(const Homomorphism& hom) {
  return schreier_transversal(hom).words;
}

SubgroupRecord make_subgroup_record(const Homomorphism& hom) {
  SubgroupRecord r{hom, schreier_transversal(hom), schreier_generators(hom),
                   hom.degree(), std::nullopt, Verification::Unchecked};
  const std::string& family = hom.presentation->name;
  if (family == "extended_hecke") {
    r.orientation_preserving = orientation_preserving(hom);
  } else if (family == "hecke" || family == "modular") {
    r.orientation_preserving = true;
  }
  return r;
}

}  // namespace lowindex
