#include <doctest.h>

#include "lowindex/enumeration.hpp"
#include "lowindex/orbifold.hpp"
#include "lowindex/printed_tables.hpp"

using namespace lowindex;

namespace {

// n·(1/p − 1/2)
PExpr hecke_chi(int n) { return {Rational(-n, 2), Rational(n)}; }

Homomorphism table2_hom(int row, HeckeParam p = std::nullopt) {
  const auto& r = printed_table(2).at(row - 1);
  return parse_assignment("x=" + r.assignment[0] + ",y=" + r.assignment[1],
                          shared_presentation(Family::Hecke, p), r.index);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(3, 6).to_string() == "1/2");
}

TEST_CASE("Euler characteristics of the parent groups") {
  CHECK(conway_chi("2p∞") == PExpr{Rational(-1, 2), Rational(1)});
  CHECK(conway_chi("*2p∞") == PExpr{Rational(-1, 4), Rational(1, 2)});
  CHECK(conway_chi("*2p∞").to_string() == "1/(2p) - 1/4");
  CHECK(conway_chi("2p∞").to_string() == "1/p - 1/2");
  CHECK(parent_chi(Family::Hecke) == conway_chi("2p∞"));
  CHECK(parent_chi(Family::ExtendedHecke) == conway_chi("*2p∞"));
  CHECK_THROWS(parent_chi(Family::Picard));
}

TEST_CASE("concrete symbols") {
  CHECK(conway_chi("*632") == PExpr{});
  CHECK(conway_chi("2222") == PExpr{});
  CHECK(conway_chi("o") == PExpr{});
  CHECK(conway_chi("xx") == PExpr{});
  CHECK(conway_chi("*") == PExpr{Rational(1), Rational(0)});
  CHECK(conway_chi("532") == PExpr{Rational(1, 30), Rational(0)});
  CHECK(conway_chi("*(10)2").constant == Rational(3, 10));
}

TEST_CASE("parse structure") {
  const auto sym = conway_parse("*2p∞", std::nullopt);
  REQUIRE(sym.tokens.size() == 4);
  CHECK(sym.tokens[0].kind == ConwayTokenKind::Mirror);
  CHECK(sym.tokens[1].kind == ConwayTokenKind::Corner);
  CHECK(sym.tokens[2].order.symbolic);
  CHECK(sym.tokens[3].kind == ConwayTokenKind::InfiniteCorner);

  const auto cones = conway_parse("2p∞", std::nullopt);
  CHECK(cones.tokens[0].kind == ConwayTokenKind::Cone);
  CHECK(cones.tokens[2].kind == ConwayTokenKind::InfiniteCone);

  const auto folded = conway_parse("(p/3)∞", 12);
  CHECK(folded.tokens[0].order.value == 4);
  CHECK(folded.tokens[0].order.from_p);

  CHECK_THROWS_AS(conway_parse("", std::nullopt), ParseError);
  CHECK_THROWS_AS(conway_parse("2*x2", std::nullopt), ParseError);
  CHECK_THROWS_AS(conway_parse("(p/)", std::nullopt), ParseError);
}

TEST_CASE("chi consistency of table strings") {
  CHECK(chi_consistency("*pp∞", 2, Family::ExtendedHecke));
  CHECK(chi_consistency("(p/3)222∞", 3, Family::Hecke));
  CHECK_FALSE(chi_consistency("222(p/4)∞∞", 4, Family::Hecke));
  CHECK(chi_consistency("2222(p/4)∞", 4, Family::Hecke));
  CHECK(conway_chi("222(p/4)∞∞") == PExpr{Rational(-5, 2), Rational(4)});
  CHECK(chi_consistency("23∞", 1, Family::Modular));
  CHECK_THROWS_AS(chi_consistency("p^∞", 2, Family::ExtendedHecke), ParseError);
}

TEST_CASE("signatures of Table 2 assignments") {
  const auto s1 = signature_from_hom(table2_hom(1));
  CHECK(s1.genus == 0);
  CHECK(s1.cusps == 1);
  CHECK(s1.conway() == "pp∞");

  const auto s4 = signature_from_hom(table2_hom(4));
  CHECK(s4.conway() == "(p/3)222∞");
  CHECK(s4.chi() == hecke_chi(3));

  const auto s9 = signature_from_hom(table2_hom(9));
  CHECK(s9.genus == 1);
  CHECK(s9.cusps == 1);
  REQUIRE(s9.cones.size() == 1);
  CHECK(s9.cones[0].symbolic);
  CHECK(s9.cones[0].value == 4);
  CHECK(signature_from_hom(table2_hom(9, 12)).conway() == "o(3)∞");

  // the alternative to the printed "222(p/4)∞∞"
  const auto s8 = signature_from_hom(table2_hom(8));
  CHECK(s8.conway() == "(p/4)2222∞");
  CHECK(s8.chi() == hecke_chi(4));
}

TEST_CASE("Riemann-Hurwitz holds for every Hecke assignment") {
  auto pres = shared_presentation(Family::Hecke, std::nullopt);
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& hom : enumerate_homs(pres, n)) {
      Signature sig;
      REQUIRE_NOTHROW(sig = signature_from_hom(hom));
      CHECK(sig.genus >= 0);
      CHECK(sig.chi() == hecke_chi(n));
      CHECK(conway_chi(conway_parse(sig.conway(), std::nullopt)) == hecke_chi(n));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("signature needs a Hecke assignment") {
  auto ext = shared_presentation(Family::ExtendedHecke, std::nullopt);
  CHECK_THROWS(signature_from_hom(parse_assignment("P=(12),Q=(12),R=(12)", ext, 2)));
}

TEST_CASE("orientation and restriction") {
  auto ext = shared_presentation(Family::ExtendedHecke, std::nullopt);
  const auto& t1 = printed_table(1);
  auto row_hom = [&](int row) {
    const auto& r = t1.at(row - 1);
    return parse_assignment("P=" + r.assignment[0] + ",Q=" + r.assignment[1] +
                                ",R=" + r.assignment[2],
                            ext, r.index);
  };
  CHECK(orientation_preserving(row_hom(30)));
  CHECK_FALSE(orientation_preserving(row_hom(2)));

  const auto k30 = k_restriction(row_hom(30));
  CHECK(k30.degree() == 2);
  const auto t2_1 = canonical_form(table2_hom(1), DedupeMode::Subgroups);
  CHECK(k30.images == t2_1.images);
  CHECK(signature_from_hom(k30).conway() == "pp∞");

  const auto k31 = k_restriction(row_hom(31));
  CHECK(k31.images == canonical_form(table2_hom(2), DedupeMode::Subgroups).images);
  CHECK_THROWS(k_restriction(row_hom(2)));
}

TEST_CASE("cone ordering in rendered signatures") {
  Signature s;
  s.genus = 1;
  s.cones = {ConeOrder::concrete(2), ConeOrder::p_over(3), ConeOrder::concrete(3),
             ConeOrder::p_over(1)};
  s.cusps = 2;
  CHECK(s.conway() == "op(p/3)32∞∞");
}
