#include <doctest.h>

#include "lowindex/homomorphism.hpp"

using namespace lowindex;

namespace {

Alphabet reflections() {
  return Alphabet({{0, "P", true}, {1, "Q", true}, {2, "R", true}});
}

}  // namespace

TEST_CASE("parse and format over P, Q, R") {
  const auto a = reflections();
  const auto w = a.parse("QRQP");
  REQUIRE(w.size() == 4);
  CHECK(w.letters[0].gen == 1);
  CHECK(w.letters[3].gen == 0);
  CHECK(a.format(w) == "QRQP");
  CHECK(a.parse("").empty());
  CHECK_THROWS_AS(a.parse("QZ"), ParseError);
}

TEST_CASE("primed names parse as single letters") {
  const auto pres = tetrahedral_coxeter();
  const auto w = pres.parse("S'P'P'R'");
  CHECK(w.size() == 4);
  CHECK(pres.format(free_reduce(w, pres.alphabet)) == "S'R'");
}

TEST_CASE("inverse letters of non-involutions") {
  const auto h = hecke(std::nullopt);
  const auto w = h.parse("xy^-1");
  REQUIRE(w.size() == 2);
  CHECK(w.letters[1].exp == 1);  // y is an involution
  const auto v = h.parse("x^-1y");
  CHECK(v.letters[0].exp == -1);
  CHECK(h.format(inverse(v, h.alphabet)) == "yx");
}

TEST_CASE("free reduction cancels involution squares and x·x⁻¹") {
  const auto a = reflections();
  CHECK(a.format(free_reduce(a.parse("PQQP"), a)) == "");
  CHECK(a.format(free_reduce(a.parse("PQQR"), a)) == "PR");
  const auto h = hecke(std::nullopt);
  CHECK(h.format(free_reduce(h.parse("xx^-1yy"), h.alphabet)) == "");
  CHECK(h.format(power(h.parse("xy"), 3)) == "xyxyxy");
}

TEST_CASE("family relators") {
  const auto e4 = extended_hecke(4);
  REQUIRE(e4.relators.size() == 2);
  CHECK(e4.format(e4.relators[0].word) == "RP");
  CHECK(e4.relators[0].order.value == 2);
  CHECK(e4.format(e4.relators[1].word) == "QR");
  CHECK(e4.relators[1].order.value == 4);
  CHECK(e4.relators[1].order.parametric);

  const auto es = extended_hecke(std::nullopt);
  CHECK(es.relators[1].order.symbolic());

  const auto m = modular();
  CHECK(m.p == 3);
  CHECK(m.relators.size() == 1);
}

TEST_CASE("Picard generators expand to the reflection words") {
  const auto pic = picard();
  CHECK(picard_identity_check());
  const auto& refl = *pic.reflection_alphabet;
  auto reduced = [&](const char* a, const char* b_inv) {
    const auto w = concat(pic.expand(pic.parse(a)), inverse(pic.expand(pic.parse(b_inv)), refl));
    return refl.format(free_reduce(w, refl));
  };
  CHECK(refl.format(free_reduce(pic.expand(pic.parse("g4g3")), refl)) == "Q'R'Q'P'");
  CHECK(reduced("g2", "g1") == "S'R'");
  CHECK(reduced("g2", "g3") == "S'Q'P'Q'");
  CHECK(reduced("g4g3", "g2") == "Q'R'Q'S'");
  CHECK(reduced("g4g3", "g1") == "Q'R'Q'R'");
}

TEST_CASE("even reflection words rewrite over x, y") {
  const auto h = hecke(std::nullopt);
  const auto a = reflections();
  CHECK(h.format(*hecke_word_from_reflections(a.parse("QP"), h)) == "xy");
  CHECK(h.format(*hecke_word_from_reflections(a.parse("RQ"), h)) == "x^-1");
  CHECK_FALSE(hecke_word_from_reflections(a.parse("PQR"), h).has_value());
}

TEST_CASE("evaluation applies the rightmost letter first") {
  auto pres = std::make_shared<const Presentation>(hecke(std::nullopt));
  const auto hom = parse_assignment("x=(12),y=(23)", pres, 3);
  CHECK(eval(pres->parse("xy"), hom) == Permutation::parse("(123)"));
  const auto h4 = parse_assignment("x=(1234),y=(13)(24)", pres, 4);
  CHECK(eval(pres->parse("xy"), h4) == Permutation::parse("(1432)"));
}

TEST_CASE("validity and divisibility") {
  auto es = shared_presentation(Family::ExtendedHecke, std::nullopt);
  const auto hom = parse_assignment("P=(12),Q=(1),R=(1)", es, 2);
  CHECK(parametric_divisibility(hom) == 1);
  const auto hom2 = parse_assignment("P=(1),Q=(12),R=(1)", es, 2);
  CHECK(parametric_divisibility(hom2) == 2);

  auto e3 = shared_presentation(Family::ExtendedHecke, 3);
  CHECK_FALSE(is_valid(parse_assignment("P=(1),Q=(12),R=(1)", e3, 2)));
  CHECK(is_valid(parse_assignment("P=(12),Q=(1),R=(1)", e3, 2)));
  // (RP)^2 fails
  CHECK_FALSE(is_valid(parse_assignment("P=(12),Q=(1),R=(23)", e3, 3)));
}
