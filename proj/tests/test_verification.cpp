#include <doctest.h>

#include <algorithm>

#include "lowindex/json_io.hpp"
#include "lowindex/verification.hpp"

using namespace lowindex;

namespace {

const PrintedRow& row(int table, int n) { return printed_table(table).at(n - 1); }

bool has(const RowResult& r, DiscrepancyKind k) {
  return std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                     [&](const Discrepancy& d) { return d.kind == k; });
}

}  // namespace

TEST_CASE("table shapes") {
  CHECK(printed_table(1).size() == 32);
  CHECK(printed_table(2).size() == 16);
  CHECK(printed_table(3).size() == 12);
  CHECK(table_family(3) == Family::Picard);
  CHECK(assignment_columns(2) == std::vector<std::string>{"QR", "RP"});
}

TEST_CASE("cell normalization") {
  CHECK(normalize_orbifold(R"($2^*(p/4)^\infty$)") == "2*(p/4)∞");
  CHECK(normalize_orbifold(R"($*pp^\infty$)") == "*pp∞");
  CHECK(split_words("$QR, PQR, PQPQ$") == std::vector<std::string>{"QR", "PQR", "PQPQ"});
  CHECK(expand_powers("QP(QR)^3PQ") == "QPQRQRQRPQ");
  CHECK(expand_powers("((QP)^2R)^2") == "QPQPRQPQPR");
  CHECK(region_words(R"($\Delta \cup Q(\Delta) \cup QP(\Delta)$)") ==
        std::vector<std::string>{"", "Q", "QP"});
}

TEST_CASE("Table 1 no. 1 at p = 12 is reproduced") {
  const auto r = verify_row(row(1, 1), 12);
  CHECK(r.discrepancies.empty());
  CHECK(r.status() == "ok");
}

TEST_CASE("Table 2 no. 9 signature") {
  const auto r = verify_row(row(2, 9), 12);
  const auto it = std::find_if(r.discrepancies.begin(), r.discrepancies.end(), [](const Discrepancy& d) {
    return d.kind == DiscrepancyKind::SignatureMismatch;
  });
  REQUIRE(it != r.discrepancies.end());
  CHECK(it->recomputed == "o(3)∞");
}

TEST_CASE("Table 2 no. 4 and no. 8 strings") {
  CHECK_FALSE(has(verify_row(row(2, 4), 12), DiscrepancyKind::ChiInconsistent));
  CHECK_FALSE(has(verify_row(row(2, 4), 12), DiscrepancyKind::SignatureMismatch));
  const auto r8 = verify_row(row(2, 8), 12);
  CHECK(has(r8, DiscrepancyKind::ChiInconsistent));
  CHECK(has(r8, DiscrepancyKind::SignatureMismatch));
}

TEST_CASE("unparseable strings are reported") {
  CHECK(has(verify_row(row(1, 5), 12), DiscrepancyKind::StringUnparseable));
}

TEST_CASE("Table 3 no. 1 is invalid with the nearest completion") {
  const auto r = verify_row(row(3, 1), 12);
  REQUIRE(has(r, DiscrepancyKind::AssignmentInvalid));
  for (const auto& d : r.discrepancies) {
    if (d.kind == DiscrepancyKind::AssignmentInvalid) {
      CHECK(d.recomputed == "nearest valid ((1),(1),(12),(12))");
    }
  }
}

TEST_CASE("nearest valid assignment") {
  auto pic = shared_presentation(Family::Picard, std::nullopt);
  const auto id = Permutation(2);
  const auto sw = Permutation::parse("(12)");
  const auto near = nearest_valid(pic, {id, id, sw, sw});
  REQUIRE(near.has_value());
  CHECK(is_valid(*near));
  CHECK(near->images == std::vector<Permutation>{id, id, sw, sw});
}

TEST_CASE("relator diagnostics") {
  const auto rel = picard_table_relators();
  CHECK(rel.relators.size() == 4);
  const auto rep = verify_all(12);
  REQUIRE(rep.picard_relators.size() == 2);
  CHECK(rep.picard_relators[0].counts == std::vector<int>{3, 1, 4});
  CHECK(rep.picard_relators[1].counts == std::vector<int>{3, 2, 7});
}

TEST_CASE("full report") {
  const auto rep = verify_all(12);
  CHECK(rep.tables.size() == 3);
  CHECK(rep.census.size() == 12);
  int mismatched = 0;
  for (const auto& c : rep.census) {
    if (!c.match()) {
      ++mismatched;
      CHECK(c.family == Family::Picard);
    }
  }
  CHECK(mismatched == 2);
  for (const auto& b : rep.bijections) {
    if (b.table != 3) CHECK(b.holds());
  }
  const auto allow = load_allowlist(default_allowlist_path());
  CHECK(outside_allowlist(rep, allow).empty());
  // byte-identical on repeat
  CHECK(report_json(rep).dump() == report_json(verify_all(12)).dump());
}

TEST_CASE("kind names round trip") {
  for (auto k : {DiscrepancyKind::AssignmentInvalid, DiscrepancyKind::ChiInconsistent,
                 DiscrepancyKind::ElementTypeMismatch, DiscrepancyKind::ClassMismatch}) {
    CHECK(parse_discrepancy_kind(kind_name(k)) == k);
  }
  CHECK_THROWS(parse_discrepancy_kind("bogus"));
}
