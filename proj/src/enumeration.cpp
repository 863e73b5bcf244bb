#include "lowindex/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lowindex {

std::string mode_name(DedupeMode m) {
  return m == DedupeMode::Subgroups ? "subgroups" : "classes";
}

DedupeMode parse_mode(std::string_view name) {
  if (name == "subgroups") return DedupeMode::Subgroups;
  if (name == "classes" || name == "conjugacy_classes") {
    return DedupeMode::ConjugacyClasses;
  }
  throw UsageError("unknown mode '" + std::string(name) + "'");
}

std::string CensusEntry::condition_text() const {
  if (!condition) return {};
  return std::to_string(*condition) + " | p";
}

namespace {

struct Search {
  const Presentation& pres;
  int n;
  std::vector<std::vector<Permutation>> candidates;
  // relators_ready[k]: relators whose highest generator id is k
  std::vector<std::vector<const Relator*>> relators_ready;
  std::vector<Permutation> current;
  std::vector<std::vector<Permutation>> found;

  bool relator_ok(const Relator& rel) const {
    Permutation r(n);
    for (const auto& l : rel.word.letters) {
      const Permutation& g = current[l.gen];
      r = compose(r, l.exp > 0 ? g : g.inverse());
    }
    if (!rel.order.value) return true;  // symbolic: divisibility recorded
    return *rel.order.value % r.order() == 0;
  }

  void run(std::size_t k) {
    if (k == candidates.size()) {
      if (is_transitive(current, n)) found.push_back(current);
      return;
    }
    for (const auto& c : candidates[k]) {
      current[k] = c;
      bool ok = true;
      for (const Relator* rel : relators_ready[k]) {
        if (!relator_ok(*rel)) {
          ok = false;
          break;
        }
      }
      if (ok) run(k + 1);
    }
  }
};

}  // namespace

std::vector<Homomorphism> enumerate_homs(const PresentationPtr& pres, int n) {
  if (n < 1 || n > kMaxDegree) {
    throw UsageError("degree " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxDegree));
  }
  const std::size_t ngens = pres->alphabet.size();
  const auto perms = all_permutations(n);

  Search s{*pres, n, {}, {}, std::vector<Permutation>(ngens, Permutation(n)), {}};
  s.relators_ready.resize(ngens);
  for (const auto& rel : pres->relators) {
    int top = 0;
    for (const auto& l : rel.word.letters) top = std::max(top, l.gen);
    s.relators_ready[top].push_back(&rel);
  }
  for (std::size_t g = 0; g < ngens; ++g) {
    std::vector<Permutation> c;
    for (const auto& perm : perms) {
      if (pres->alphabet[static_cast<int>(g)].involution && perm.order() > 2) {
        continue;
      }
      c.push_back(perm);
    }
    s.candidates.push_back(std::move(c));
  }
  s.run(0);

  std::vector<Homomorphism> out;
  out.reserve(s.found.size());
  for (auto& images : s.found) {
    Homomorphism h{pres, std::move(images), std::nullopt};
    h.divisibility = parametric_divisibility(h);
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

std::vector<Permutation> acting_group(int n, DedupeMode mode) {
  std::vector<Permutation> group;
  for (auto& s : all_permutations(n)) {
    if (mode == DedupeMode::ConjugacyClasses || s(1) == 1) {
      group.push_back(std::move(s));
    }
  }
  return group;
}

Homomorphism canonical_under(const Homomorphism& hom,
                             const std::vector<Permutation>& group) {
  Homomorphism best = hom;
  std::vector<Permutation> trial(hom.images.size(), Permutation(hom.degree()));
  for (const auto& s : group) {
    for (std::size_t g = 0; g < hom.images.size(); ++g) {
      trial[g] = conjugate(hom.images[g], s);
    }
    if (trial < best.images) best.images = trial;
  }
  return best;
}

}  // namespace

Homomorphism canonical_form(const Homomorphism& hom, DedupeMode mode) {
  return canonical_under(hom, acting_group(hom.degree(), mode));
}

std::vector<Homomorphism> dedupe(const std::vector<Homomorphism>& homs,
                                 DedupeMode mode) {
  if (homs.empty()) return {};
  const int n = homs.front().degree();
  const auto group = acting_group(n, mode);
  std::set<std::vector<Permutation>> seen;
  std::vector<Homomorphism> reps;
  for (const auto& h : homs) {
    if (h.degree() != n) throw UsageError("dedupe: mixed degrees");
    Homomorphism c = canonical_under(h, group);
    if (seen.insert(c.images).second) reps.push_back(std::move(c));
  }
  std::sort(reps.begin(), reps.end(),
            [](const Homomorphism& a, const Homomorphism& b) {
              return a.images < b.images;
            });
  return reps;
}

CensusEntry census(Family family, int n, DedupeMode mode, HeckeParam p) {
  if (family == Family::Picard && p) {
    throw UsageError("the Picard family takes no parameter p");
  }
  if (family == Family::Modular) {
    if (p && *p != 3) throw UsageError("the modular family fixes p = 3");
    p = 3;
  }
  auto pres = shared_presentation(family, p);
  CensusEntry entry{family, n, mode, p, std::nullopt, {}};
  entry.representatives = dedupe(enumerate_homs(pres, n), mode);
  if (pres->parameterized && !p) {
    int d = 1;
    for (const auto& h : entry.representatives) d = std::lcm(d, *h.divisibility);
    if (d > 1) entry.condition = d;
  }
  return entry;
}

}  // namespace lowindex
