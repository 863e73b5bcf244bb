// Acceptance checks, one line per criterion.
#include <chrono>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "lowindex/cli.hpp"
#include "lowindex/coset_enumeration.hpp"
#include "lowindex/enumeration.hpp"
#include "lowindex/hyperbolic.hpp"
#include "lowindex/orbifold.hpp"
#include "lowindex/printed_tables.hpp"
#include "lowindex/render.hpp"
#include "lowindex/verification.hpp"

using namespace lowindex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

Outcome census_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  struct Claim {
    Family f;
    int n;
    DedupeMode mode;
    int expected;
    std::optional<int> condition;
  };
  const auto S = DedupeMode::Subgroups;
  const auto C = DedupeMode::ConjugacyClasses;
  const Claim claims[] = {
      {Family::ExtendedHecke, 2, S, 7, 2}, {Family::ExtendedHecke, 3, C, 3, {}},
      {Family::ExtendedHecke, 4, C, 22, {}}, {Family::Hecke, 2, S, 3, 2},
      {Family::Hecke, 3, C, 3, {}},          {Family::Hecke, 4, C, 10, {}},
      {Family::Modular, 2, S, 1, {}},        {Family::Modular, 3, C, 2, {}},
      {Family::Modular, 4, C, 2, {}},        {Family::Picard, 2, S, 3, {}},
      {Family::Picard, 3, C, 2, {}},         {Family::Picard, 4, C, 7, {}},
  };
  for (const auto& c : claims) {
    const auto entry = census(c.f, c.n, c.mode, std::nullopt);
    const int got = static_cast<int>(entry.count());
    if (got != c.expected) {
      o.fail(family_name(c.f) + " n=" + std::to_string(c.n) + " " + mode_name(c.mode) +
             ": expected " + std::to_string(c.expected) + ", got " + std::to_string(got));
    }
    if (c.condition && entry.condition != c.condition) {
      o.fail(family_name(c.f) + " n=" + std::to_string(c.n) + ": condition " +
             entry.condition_text());
    }
    if (c.f == Family::ExtendedHecke || c.f == Family::Hecke) {
      // every representative is valid once 12 | p
      if (entry.condition && 12 % *entry.condition != 0) {
        o.fail(family_name(c.f) + " n=" + std::to_string(c.n) + " condition not subsumed by 12|p");
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 10) o.fail("took " + std::to_string(t) + " s");
  return o;
}

Outcome remark_invariant() {
  Outcome o;
  for (auto f : {Family::ExtendedHecke, Family::Hecke, Family::Modular, Family::Picard}) {
    for (int p : {3, 4, 6, 12}) {
      const bool param = f == Family::ExtendedHecke || f == Family::Hecke;
      if (!param && p != 3) continue;
      const HeckeParam hp = param ? HeckeParam(p) : std::nullopt;
      for (int n = 2; n <= 4; ++n) {
        const auto homs = enumerate_homs(shared_presentation(f, hp), n).size();
        const auto subs = census(f, n, DedupeMode::Subgroups, hp).count();
        if (homs != subs * factorial(n - 1)) {
          o.fail(family_name(f) + " p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
      }
    }
  }
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t records = 0;
  auto sweep = [&](Family f, HeckeParam p) {
    auto pres = shared_presentation(f, p);
    for (int n = 2; n <= 4; ++n) {
      for (const auto& hom : enumerate_homs(pres, n)) {
        auto rec = make_subgroup_record(hom);
        ++records;
        if (verify_index(rec, *pres, 1'000'000) != Verification::Verified) {
          o.fail(family_name(f) + " " + hom.to_string());
        }
      }
    }
  };
  for (int p : {3, 4, 6, 12}) {
    sweep(Family::ExtendedHecke, p);
    sweep(Family::Hecke, p);
  }
  sweep(Family::Modular, std::nullopt);
  sweep(Family::Picard, std::nullopt);

  auto pres = shared_presentation(Family::ExtendedHecke, 4);
  auto rec = make_subgroup_record(parse_assignment("P=(12),Q=(12),R=(12)", pres, 2));
  std::vector<Word> kept;
  for (const auto& g : rec.generators) {
    if (pres->format(g) != "RP") kept.push_back(g);
  }
  if (kept.size() + 1 != rec.generators.size()) o.fail("RP not among the Schreier generators");
  const auto mutated = todd_coxeter(*pres, kept, 1'000'000);
  if (mutated.index == std::optional<std::size_t>(2)) o.fail("mutation returned 2");

  const double t = seconds_since(t0);
  o.note = std::to_string(records) + " records" + (o.note.empty() ? "" : "; " + o.note);
  if (t >= 60) o.fail("took " + std::to_string(t) + " s");
  return o;
}

Outcome riemann_hurwitz() {
  Outcome o;
  auto pres = shared_presentation(Family::Hecke, std::nullopt);
  std::size_t total = 0;
  for (int n = 1; n <= 4; ++n) {
    const PExpr expected{Rational(-n, 2), Rational(n)};
    for (const auto& hom : enumerate_homs(pres, n)) {
      ++total;
      try {
        const auto sig = signature_from_hom(hom);
        if (sig.genus < 0) o.fail("negative genus for " + hom.to_string());
        if (conway_chi(conway_parse(sig.conway(), std::nullopt)) != expected) {
          o.fail("chi of " + sig.conway());
        }
      } catch (const std::exception& e) {
        o.fail(hom.to_string() + ": " + e.what());
      }
    }
  }
  o.note = std::to_string(total) + " assignments" + (o.note.empty() ? "" : "; " + o.note);
  return o;
}

Outcome string_consistency() {
  Outcome o;
  const auto allow = load_allowlist(default_allowlist_path());
  auto allowed = [&](int table, int row) {
    for (const auto& a : allow) {
      if (a.table == table && a.row == row && a.kind == DiscrepancyKind::ChiInconsistent) return true;
    }
    return false;
  };
  for (int table : {1, 2}) {
    for (const auto& row : printed_table(table)) {
      const auto s = normalize_orbifold(row.orbifold);
      bool ok = false;
      try {
        ok = chi_consistency(s, row.index, table_family(table));
      } catch (const ParseError&) {
        continue;
      }
      if (!ok && !allowed(table, row.row)) {
        o.fail("table " + std::to_string(table) + " no. " + std::to_string(row.row));
      }
    }
  }
  if (conway_chi("*2p∞") != PExpr{Rational(-1, 4), Rational(1, 2)}) o.fail("chi(*2p∞)");
  if (conway_chi("2p∞") != PExpr{Rational(-1, 2), Rational(1)}) o.fail("chi(2p∞)");
  const auto& t2 = printed_table(2);
  if (!chi_consistency(normalize_orbifold(t2[3].orbifold), 3, Family::Hecke)) o.fail("table 2 no. 4");
  if (chi_consistency(normalize_orbifold(t2[7].orbifold), 4, Family::Hecke)) o.fail("table 2 no. 8 passes");
  const auto hom = parse_assignment("x=" + t2[7].assignment[0] + ",y=" + t2[7].assignment[1],
                                    shared_presentation(Family::Hecke, std::nullopt), 4);
  const auto alt = signature_from_hom(hom);
  if (!chi_consistency(alt.conway(), 4, Family::Hecke)) o.fail("alternative " + alt.conway());
  return o;
}

Outcome geometry() {
  Outcome o;
  static const Alphabet a({{0, "P", true}, {1, "Q", true}, {2, "R", true}});
  for (int p = 3; p <= 12; ++p) {
    const std::string at = " at p=" + std::to_string(p);
    for (const char* r : {"P", "Q", "R"}) {
      const auto m = eval_word(a.parse(r), p);
      if (std::abs(std::abs(m.det()) - 1) > kDetTolerance) o.fail(std::string(r) + " det" + at);
      if (classify(m, p).kind != IsometryKind::Reflection) o.fail(std::string(r) + at);
      if (!compose(m, m).is_identity()) o.fail(std::string(r) + "^2" + at);
    }
    const auto qr = classify(eval_word(a.parse("QR"), p), p);
    if (qr.kind != IsometryKind::Rotation || qr.rotation_order != p) o.fail("QR" + at);
    const auto rp = classify(eval_word(a.parse("RP"), p), p);
    if (rp.kind != IsometryKind::Rotation || rp.rotation_order != 2) o.fail("RP" + at);
    if (classify(eval_word(a.parse("QP"), p), p).kind != IsometryKind::Parabolic) o.fail("QP" + at);
  }
  const auto h = classify(eval_word(a.parse("QRQP"), 4), 4);
  if (h.kind != IsometryKind::Hyperbolic) o.fail("QRQP not hyperbolic");
  if (std::abs(std::abs(h.trace) - 2 * std::numbers::sqrt2) > 1e-8) o.fail("QRQP trace");
  return o;
}

Outcome picard_structure() {
  Outcome o;
  if (!picard_identity_check()) o.fail("identity check");
  const auto homs = enumerate_homs(shared_presentation(Family::Picard, std::nullopt), 2);
  const std::vector<std::string> expected = {
      "g1=(1),g2=(1),g3=(12),g4=(12)",
      "g1=(12),g2=(12),g3=(1),g4=(12)",
      "g1=(12),g2=(12),g3=(12),g4=(1)",
  };
  std::vector<std::string> got;
  for (const auto& h : homs) got.push_back(h.to_string());
  std::sort(got.begin(), got.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  if (got != want) o.fail("index-2 assignments");
  const auto r = verify_row(printed_table(3).front(), 12);
  bool flagged = false;
  for (const auto& d : r.discrepancies) {
    if (d.kind == DiscrepancyKind::AssignmentInvalid && d.recomputed == "nearest valid ((1),(1),(12),(12))") flagged = true;
  }
  if (!flagged) o.fail("table 3 no. 1 not flagged with its completion");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::ostringstream out1, out2, err;
  const int c1 = run_cli({"verify", "--p", "12"}, out1, err);
  const int c2 = run_cli({"verify", "--p", "12"}, out2, err);
  if (c1 != 0 || c2 != 0) o.fail("verify exit " + std::to_string(c1));
  if (out1.str() != out2.str()) o.fail("verify reports differ");

  RenderScene scene;
  scene.hom = parse_assignment("P=(12),Q=(12),R=(12)",
                               shared_presentation(Family::ExtendedHecke, 4), 2);
  scene.p = 4;
  scene.depth = 6;
  if (render_coloring(scene) != render_coloring(scene)) o.fail("render differs");
  if (!mirror_adjacency_holds(scene, 3)) o.fail("mirror adjacency");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"census reproduction", census_reproduction},
      {"remark invariant", remark_invariant},
      {"oracle agreement", oracle_agreement},
      {"Riemann-Hurwitz integrality", riemann_hurwitz},
      {"orbifold string consistency", string_consistency},
      {"geometry", geometry},
      {"Picard structure", picard_structure},
      {"determinism and verification gate", determinism},
  };
  int failures = 0;
  int i = 0;
  for (const auto& [name, check] : criteria) {
    ++i;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i, name, seconds_since(t0),
                o.note.empty() ? "" : ": ", o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
