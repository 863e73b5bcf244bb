#include <doctest.h>

#include <set>

#include "lowindex/enumeration.hpp"

using namespace lowindex;

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Independent count: every tuple of permutations, relators checked directly
// on image arrays.
std::size_t brute_force_homs(const Presentation& pres, int n) {
  const auto all = all_permutations(n);
  const int g = static_cast<int>(pres.alphabet.size());
  std::vector<std::size_t> idx(g, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<Permutation> imgs;
    bool ok = true;
    for (int i = 0; i < g; ++i) {
      imgs.push_back(all[idx[i]]);
      if (pres.alphabet[i].involution && !compose(imgs[i], imgs[i]).is_identity()) ok = false;
    }
    for (const auto& rel : pres.relators) {
      if (!ok) break;
      Permutation w(n);
      for (const auto& l : rel.word.letters) {
        const auto& m = l.exp > 0 ? imgs[l.gen] : imgs[l.gen].inverse();
        w = compose(w, m);
      }
      const int m = *rel.order.value;
      Permutation acc(n);
      for (int k = 0; k < m; ++k) acc = compose(acc, w);
      ok = acc.is_identity();
    }
    if (ok && is_transitive(imgs, n)) ++count;
    int i = 0;
    while (i < g && ++idx[i] == all.size()) idx[i++] = 0;
    if (i == g) break;
  }
  return count;
}

}  // namespace

TEST_CASE("census counts") {
  const std::optional<int> sym;
  SUBCASE("extended Hecke") {
    const auto c2 = census(Family::ExtendedHecke, 2, DedupeMode::Subgroups, sym);
    CHECK(c2.count() == 7);
    CHECK(c2.condition == 2);
    CHECK(census(Family::ExtendedHecke, 3, DedupeMode::ConjugacyClasses, sym).count() == 3);
    CHECK(census(Family::ExtendedHecke, 4, DedupeMode::ConjugacyClasses, sym).count() == 22);
  }
  SUBCASE("Hecke") {
    CHECK(census(Family::Hecke, 2, DedupeMode::Subgroups, sym).count() == 3);
    CHECK(census(Family::Hecke, 3, DedupeMode::ConjugacyClasses, sym).count() == 3);
    CHECK(census(Family::Hecke, 4, DedupeMode::ConjugacyClasses, sym).count() == 10);
    CHECK(census(Family::Hecke, 4, DedupeMode::ConjugacyClasses, 12).count() == 10);
  }
  SUBCASE("modular") {
    CHECK(census(Family::Modular, 2, DedupeMode::Subgroups, sym).count() == 1);
    CHECK(census(Family::Modular, 3, DedupeMode::ConjugacyClasses, sym).count() == 2);
    CHECK(census(Family::Modular, 4, DedupeMode::ConjugacyClasses, sym).count() == 2);
    CHECK(census(Family::Hecke, 3, DedupeMode::ConjugacyClasses, 3).count() == 2);
  }
  SUBCASE("Picard as defined") {
    CHECK(census(Family::Picard, 2, DedupeMode::Subgroups, sym).count() == 3);
    // The printed census says 2 and 7; the defining relators give fewer.
    CHECK(census(Family::Picard, 3, DedupeMode::ConjugacyClasses, sym).count() == 1);
    CHECK(census(Family::Picard, 4, DedupeMode::ConjugacyClasses, sym).count() == 4);
  }
  SUBCASE("odd p extended Hecke at index 2") {
    CHECK(census(Family::ExtendedHecke, 2, DedupeMode::Subgroups, 3).count() == 3);
  }
}

TEST_CASE("Picard index-2 assignments are the three parity solutions") {
  const auto homs = enumerate_homs(shared_presentation(Family::Picard, std::nullopt), 2);
  REQUIRE(homs.size() == 3);
  std::set<std::string> got;
  for (const auto& h : homs) got.insert(h.to_string());
  CHECK(got.count("g1=(1),g2=(1),g3=(12),g4=(12)") == 1);
  CHECK(got.count("g1=(12),g2=(12),g3=(1),g4=(12)") == 1);
  CHECK(got.count("g1=(12),g2=(12),g3=(12),g4=(1)") == 1);
}

TEST_CASE("enumeration agrees with brute force") {
  for (int p : {3, 4, 6}) {
    for (int n = 2; n <= 4; ++n) {
      for (auto f : {Family::ExtendedHecke, Family::Hecke}) {
        auto pres = shared_presentation(f, p);
        CAPTURE(p);
        CAPTURE(n);
        CHECK(enumerate_homs(pres, n).size() == brute_force_homs(*pres, n));
      }
    }
  }
  for (int n = 2; n <= 4; ++n) {
    auto pres = shared_presentation(Family::Picard, std::nullopt);
    CHECK(enumerate_homs(pres, n).size() == brute_force_homs(*pres, n));
  }
}

TEST_CASE("homs equal subgroups times (n-1)!") {
  for (auto f : {Family::ExtendedHecke, Family::Hecke, Family::Modular, Family::Picard}) {
    for (int p : {3, 4, 6, 12}) {
      if ((f == Family::Modular && p != 3) || (f == Family::Picard && p != 3)) continue;
      HeckeParam param = (f == Family::ExtendedHecke || f == Family::Hecke) ? HeckeParam(p) : std::nullopt;
      for (int n = 2; n <= 4; ++n) {
        const auto homs = enumerate_homs(shared_presentation(f, param), n);
        const auto subs = census(f, n, DedupeMode::Subgroups, param);
        CAPTURE(family_name(f));
        CAPTURE(p);
        CAPTURE(n);
        CHECK(homs.size() == subs.count() * factorial(n - 1));
      }
    }
  }
}

TEST_CASE("canonical form is invariant under conjugation") {
  auto pres = shared_presentation(Family::Hecke, 12);
  const auto homs = enumerate_homs(pres, 4);
  const auto all = all_permutations(4);
  for (std::size_t i = 0; i < homs.size(); i += 7) {
    const auto canon = canonical_form(homs[i], DedupeMode::ConjugacyClasses);
    for (const auto& s : all) {
      Homomorphism c = homs[i];
      for (auto& img : c.images) img = conjugate(img, s);
      CHECK(canonical_form(c, DedupeMode::ConjugacyClasses).images == canon.images);
    }
  }
}

TEST_CASE("mode and family names") {
  CHECK(parse_mode("classes") == DedupeMode::ConjugacyClasses);
  CHECK(parse_mode("subgroups") == DedupeMode::Subgroups);
  CHECK_THROWS(parse_mode("other"));
  CHECK(parse_family("picard") == Family::Picard);
  CHECK_THROWS(parse_family("triangle"));
}
