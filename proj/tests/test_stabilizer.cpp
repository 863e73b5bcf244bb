#include <doctest.h>

#include <algorithm>

#include "lowindex/coset_enumeration.hpp"
#include "lowindex/enumeration.hpp"
#include "lowindex/stabilizer.hpp"

using namespace lowindex;

TEST_CASE("transversal of the all-(12) coloring") {
  auto pres = shared_presentation(Family::ExtendedHecke, 4);
  const auto hom = parse_assignment("P=(12),Q=(12),R=(12)", pres, 2);
  const auto t = schreier_transversal(hom);
  REQUIRE(t.words.size() == 2);
  CHECK(pres->format(t.rep(1)) == "");
  CHECK(pres->format(t.rep(2)) == "P");
  CHECK(Transversal::color_of(pres->parse("Q"), hom) == 2);
  CHECK(Transversal::color_of(pres->parse("QP"), hom) == 1);
}

TEST_CASE("Schreier generators fix color 1") {
  auto pres = shared_presentation(Family::ExtendedHecke, 4);
  const auto hom = parse_assignment("P=(12),Q=(12),R=(12)", pres, 2);
  const auto gens = schreier_generators(hom);
  std::vector<std::string> names;
  for (const auto& g : gens) {
    names.push_back(pres->format(g));
    CHECK(eval(g, hom)(1) == 1);
  }
  CHECK(names == std::vector<std::string>{"QP", "RP"});
}

TEST_CASE("region of P-only coloring") {
  auto pres = shared_presentation(Family::ExtendedHecke, std::nullopt);
  const auto hom = parse_assignment("P=(12),Q=(1),R=(1)", pres, 2);
  const auto region = fundamental_region(hom);
  REQUIRE(region.size() == 2);
  CHECK(pres->format(region[1]) == "P");
  std::vector<std::string> gens;
  for (const auto& g : schreier_generators(hom)) gens.push_back(pres->format(g));
  for (const char* g : {"Q", "R", "PQP"}) {
    CHECK(std::find(gens.begin(), gens.end(), g) != gens.end());
  }
}

TEST_CASE("Hecke index-2 generators") {
  auto pres = shared_presentation(Family::Hecke, 4);
  const auto hom = parse_assignment("x=(1),y=(12)", pres, 2);
  auto rec = make_subgroup_record(hom);
  CHECK(rec.index == 2);
  CHECK(rec.generators.size() == 2);
  for (const auto& g : rec.generators) CHECK(eval(g, hom)(1) == 1);
  CHECK(verify_index(rec, *pres) == Verification::Verified);
}

TEST_CASE("transversal words land on their colors") {
  for (int p : {4, 6}) {
    auto pres = shared_presentation(Family::ExtendedHecke, p);
    for (int n = 2; n <= 4; ++n) {
      for (const auto& hom : enumerate_homs(pres, n)) {
        const auto t = schreier_transversal(hom);
        for (int c = 1; c <= n; ++c) {
          CHECK(Transversal::color_of(t.rep(c), hom) == c);
        }
      }
    }
  }
}

TEST_CASE("orientation flag") {
  auto pres = shared_presentation(Family::ExtendedHecke, 12);
  CHECK_FALSE(*make_subgroup_record(parse_assignment("P=(12),Q=(1),R=(1)", pres, 2))
                   .orientation_preserving);
  CHECK(*make_subgroup_record(parse_assignment("P=(12),Q=(12),R=(12)", pres, 2))
             .orientation_preserving);
}
