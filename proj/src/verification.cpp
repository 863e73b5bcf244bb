#include "lowindex/verification.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lowindex/coset_enumeration.hpp"

namespace lowindex {

namespace {

constexpr std::size_t kTableCosetCap = 200'000;

struct KindName {
  DiscrepancyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {DiscrepancyKind::AssignmentInvalid, "assignment-invalid"},
    {DiscrepancyKind::AssignmentIllegible, "assignment-illegible"},
    {DiscrepancyKind::GeneratorFailsFix, "generator-fails-fix"},
    {DiscrepancyKind::IndexMismatch, "index-mismatch"},
    {DiscrepancyKind::ChiInconsistent, "chi-inconsistent"},
    {DiscrepancyKind::SignatureMismatch, "signature-mismatch"},
    {DiscrepancyKind::StringUnparseable, "string-unparseable"},
    {DiscrepancyKind::ElementTypeMismatch, "element-type-mismatch"},
    {DiscrepancyKind::RegionMismatch, "region-mismatch"},
    {DiscrepancyKind::DerivedMismatch, "derived-mismatch"},
    {DiscrepancyKind::ClassMismatch, "class-mismatch"},
};

std::string images_text(const std::vector<Permutation>& images) {
  std::string s = "(";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ",";
    s += images[i].to_string();
  }
  return s + ")";
}

std::string claim_text(const ElementClaim& c) {
  if (c.kind == IsometryKind::Rotation && c.order) {
    return "rotation of order " + c.order->to_string();
  }
  return kind_name(c.kind);
}

std::string class_text(const IsometryClass& c) { return c.name(); }

bool claim_matches(const ElementClaim& c, const IsometryClass& got, int p) {
  if (c.kind != got.kind) return false;
  if (c.kind != IsometryKind::Rotation || !c.order) return true;
  const int want = c.order->symbolic ? p / c.order->value : c.order->value;
  return got.rotation_order && *got.rotation_order == want;
}

/// Signature read off a mirror-free Conway string, or empty.
std::optional<Signature> signature_of(const ConwaySymbol& sym) {
  Signature s;
  for (const auto& t : sym.tokens) {
    switch (t.kind) {
      case ConwayTokenKind::Handle:
        ++s.genus;
        break;
      case ConwayTokenKind::Cone:
        s.cones.push_back(t.order);
        break;
      case ConwayTokenKind::InfiniteCone:
        ++s.cusps;
        break;
      default:
        return std::nullopt;
    }
  }
  return s;
}

class RowChecker {
 public:
  RowChecker(const PrintedRow& row, int p) : row_(row), p_(p) {
    result_.table = row.table;
    result_.row = row.row;
  }

  RowResult run() {
    switch (row_.table) {
      case 1:
        run_two_dimensional(Family::ExtendedHecke);
        break;
      case 2:
        run_two_dimensional(Family::Hecke);
        break;
      case 3:
        run_picard();
        break;
    }
    return result_;
  }

 private:
  void add(DiscrepancyKind kind, std::string detail, std::string recomputed = "") {
    result_.discrepancies.push_back(
        {row_.table, row_.row, kind, std::move(detail), std::move(recomputed)});
  }

  std::optional<Homomorphism> read_assignment(const PresentationPtr& pres) {
    Homomorphism hom;
    hom.presentation = pres;
    try {
      for (const auto& cell : row_.assignment) {
        hom.images.push_back(Permutation::parse(cell, row_.index));
      }
    } catch (const UsageError& e) {
      add(DiscrepancyKind::AssignmentIllegible, e.what());
      ++result_.illegible;
      return std::nullopt;
    }
    hom.divisibility = parametric_divisibility(hom);
    return hom;
  }

  bool check_validity(const Homomorphism& hom) {
    if (is_valid(hom)) return true;
    std::string why = is_transitive(hom.images, hom.degree())
                          ? "relator images do not have the required orders"
                          : "images do not act transitively";
    auto near = nearest_valid(hom.presentation, hom.images);
    add(DiscrepancyKind::AssignmentInvalid, why,
        near ? "nearest valid " + images_text(near->images) : "");
    return false;
  }

  void check_derived(const std::vector<Permutation>& computed,
                     const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < row_.derived.size() && i < computed.size(); ++i) {
      Permutation printed;
      try {
        printed = Permutation::parse(row_.derived[i], row_.index);
      } catch (const UsageError&) {
        ++result_.illegible;
        continue;
      }
      if (printed != computed[i]) {
        add(DiscrepancyKind::DerivedMismatch,
            names[i] + " printed " + printed.to_string(), computed[i].to_string());
      }
    }
  }

  // Tables 1 and 2.
  void run_two_dimensional(Family family) {
    const auto pres = shared_presentation(family, p_);
    const Alphabet& refl = family == Family::ExtendedHecke
                               ? pres->alphabet
                               : *pres->reflection_alphabet;
    auto hom = read_assignment(pres);
    bool valid = false;
    if (hom) {
      if (family == Family::Hecke) {
        check_derived({compose(hom->image(0), hom->image(1))}, derived_columns(2));
      }
      valid = check_validity(*hom);
    }

    // Claimed words over P, Q, R with their image in the group's alphabet.
    struct Claimed {
      std::string text;
      Word reflection_word;
      std::optional<Word> word;
    };
    auto read_word = [&](const std::string& text) -> std::optional<Claimed> {
      try {
        Word w = refl.parse(expand_powers(text));
        std::optional<Word> g = w;
        if (family == Family::Hecke) g = hecke_word_from_reflections(w, *pres);
        return Claimed{text, w, g};
      } catch (const ParseError&) {
        ++result_.illegible;
        return std::nullopt;
      }
    };

    if (valid) {
      std::vector<Word> legible;
      bool complete = true;
      for (const auto& text : split_words(row_.generators)) {
        auto c = read_word(text);
        if (!c) {
          complete = false;
          continue;
        }
        if (!c->word) {
          complete = false;
          add(DiscrepancyKind::GeneratorFailsFix,
              "generator " + text + " is orientation-reversing, not in K");
          continue;
        }
        const int image = eval(*c->word, *hom)(1);
        if (image != 1) {
          add(DiscrepancyKind::GeneratorFailsFix, "generator " + text,
              "sends color 1 to " + std::to_string(image));
        }
        legible.push_back(*c->word);
      }
      check_index(*pres, legible, row_.index, complete);

      for (const auto& claim : row_.prose) {
        auto c = read_word(claim.word);
        if (!c) continue;
        const IsometryClass got = classify(eval_word(c->reflection_word, p_), p_);
        if (!claim_matches(claim, got, p_)) {
          add(DiscrepancyKind::ElementTypeMismatch,
              claim.word + " stated as " + claim_text(claim), class_text(got));
        }
        if (!c->word) {
          add(DiscrepancyKind::GeneratorFailsFix,
              claim.word + " stated to fix color 1 is orientation-reversing, not in K");
        } else if (int image = eval(*c->word, *hom)(1); image != 1) {
          add(DiscrepancyKind::GeneratorFailsFix, claim.word + " stated to fix color 1",
              "sends color 1 to " + std::to_string(image));
        }
      }

      if (family == Family::ExtendedHecke) check_region(*hom);
    }

    check_orbifold(family);
    if (family == Family::Hecke && valid) check_signature(*hom);
  }

  void check_index(const Presentation& pres, const std::vector<Word>& words,
                   int expected, bool complete) {
    const EnumerationResult r = todd_coxeter(pres, words, kTableCosetCap);
    if (r.overflow()) {
      if (complete) {
        add(DiscrepancyKind::IndexMismatch,
            "enumeration overflow after " + std::to_string(r.cosets_defined) +
                " cosets; index not established");
      }
      return;
    }
    const int got = static_cast<int>(*r.index);
    if (got != expected && (complete || got < expected)) {
      add(DiscrepancyKind::IndexMismatch,
          "claimed generators have index " + std::to_string(got) + ", expected " +
              std::to_string(expected),
          std::to_string(got));
    }
  }

  void check_region(const Homomorphism& hom) {
    std::vector<std::string> words;
    try {
      words = region_words(row_.region);
    } catch (const ParseError&) {
      ++result_.illegible;
      return;
    }
    std::set<int> colors;
    std::string listing;
    for (const auto& text : words) {
      Word w;
      try {
        w = hom.presentation->parse(text);
      } catch (const ParseError&) {
        ++result_.illegible;
        return;
      }
      const int c = Transversal::color_of(w, hom);
      colors.insert(c);
      listing += (listing.empty() ? "" : " ") + std::to_string(c);
    }
    if (static_cast<int>(words.size()) != row_.index ||
        static_cast<int>(colors.size()) != row_.index) {
      add(DiscrepancyKind::RegionMismatch,
          "region tiles do not meet every coset exactly once (coset colors " + listing + ")");
    }
  }

  void check_orbifold(Family family) {
    check_symbol(family, row_.orbifold, "");
    if (!row_.prose_orbifold.empty()) check_symbol(family, row_.prose_orbifold, "text symbol ");
  }

  void check_symbol(Family family, const std::string& raw, const std::string& label) {
    const std::string s = normalize_orbifold(raw);
    try {
      if (!chi_consistency(s, row_.index, family)) {
        const PExpr want = Rational(row_.index) * parent_chi(family);
        add(DiscrepancyKind::ChiInconsistent,
            label + "\"" + s + "\" has chi " + conway_chi(s).to_string() + ", expected " +
                want.to_string());
      }
    } catch (const ParseError& e) {
      add(DiscrepancyKind::StringUnparseable, label + "\"" + s + "\": " + e.what());
    }
  }

  void check_signature(const Homomorphism& hom) {
    Homomorphism symbolic = hom;
    symbolic.presentation = shared_presentation(Family::Hecke, std::nullopt);
    const Signature sym = signature_from_hom(symbolic);
    const Signature conc = signature_from_hom(hom);
    const std::string s = normalize_orbifold(row_.orbifold);
    std::optional<Signature> printed;
    try {
      printed = signature_of(conway_parse(s, std::nullopt));
    } catch (const ParseError&) {
      return;  // already reported as unparseable
    }
    if (!printed || printed->conway() != sym.conway()) {
      add(DiscrepancyKind::SignatureMismatch,
          "printed \"" + s + "\", recomputed \"" + sym.conway() + "\"", conc.conway());
    }
  }

  void run_picard() {
    const auto pres = shared_presentation(Family::Picard, std::nullopt);
    auto hom = read_assignment(pres);
    if (!hom) return;
    const auto& g = hom->images;
    check_derived({compose(compose(g[3], g[2]), g[1]), compose(g[1], g[2]),
                   compose(g[1], g[0]), compose(compose(g[3], g[2]), g[0])},
                  derived_columns(3));
    if (!check_validity(*hom)) return;

    // The stabilizer inside the tetrahedral reflection group, where the
    // printed words live.
    const Presentation tet = tetrahedral_coxeter();
    std::vector<Word> stabilizer;
    for (const Word& w : schreier_generators(*hom)) stabilizer.push_back(pres->expand(w));
    const EnumerationResult table = todd_coxeter(tet, stabilizer, kTableCosetCap);
    const int expected = 4 * row_.index;
    if (table.overflow() || static_cast<int>(*table.index) != expected) {
      result_.skipped = true;
      return;
    }

    std::vector<Word> legible;
    bool complete = true;
    for (const auto& text : split_words(row_.generators)) {
      Word w;
      try {
        w = tet.alphabet.parse(text);
      } catch (const ParseError&) {
        ++result_.illegible;
        complete = false;
        continue;
      }
      if (trace_word(table, tet, w) != 0) {
        add(DiscrepancyKind::GeneratorFailsFix, "generator " + text,
            "not in the stabilizer");
      }
      legible.push_back(w);
    }
    check_index(tet, legible, expected, complete);
  }

  const PrintedRow& row_;
  int p_;
  RowResult result_;
};

Homomorphism row_hom(const PrintedRow& row, int p) {
  const Family family = table_family(row.table);
  Homomorphism hom;
  hom.presentation = shared_presentation(
      family, family == Family::Picard ? HeckeParam{} : HeckeParam{p});
  for (const auto& cell : row.assignment) {
    hom.images.push_back(Permutation::parse(cell, row.index));
  }
  hom.divisibility = parametric_divisibility(hom);
  return hom;
}

int picard_count(const PresentationPtr& pres, int n, DedupeMode mode) {
  return static_cast<int>(dedupe(enumerate_homs(pres, n), mode).size());
}

std::vector<std::string> relator_texts(const Presentation& pres) {
  std::vector<std::string> out;
  for (const auto& r : pres.relators) {
    out.push_back("(" + pres.format(r.word) + ")^" + std::to_string(*r.order.value));
  }
  return out;
}

}  // namespace

std::string kind_name(DiscrepancyKind k) {
  for (const auto& e : kKindNames) {
    if (e.kind == k) return e.name;
  }
  return "?";
}

DiscrepancyKind parse_discrepancy_kind(std::string_view name) {
  for (const auto& e : kKindNames) {
    if (name == e.name) return e.kind;
  }
  throw UsageError("unknown discrepancy kind '" + std::string(name) + "'");
}

std::string RowResult::status() const {
  if (!discrepancies.empty()) return "discrepancy";
  return skipped ? "skipped" : "ok";
}

RowResult verify_row(const PrintedRow& row, int p) { return RowChecker(row, p).run(); }

std::optional<Homomorphism> nearest_valid(const PresentationPtr& pres,
                                          const std::vector<Permutation>& images) {
  const int n = images.empty() ? 1 : images.front().degree();
  std::optional<Homomorphism> best;
  int best_distance = 0;
  for (auto& h : enumerate_homs(pres, n)) {
    if (!is_valid(h)) continue;
    int d = 0;
    for (std::size_t i = 0; i < images.size(); ++i) d += h.images[i] != images[i];
    if (!best || d < best_distance) {
      best_distance = d;
      best = std::move(h);
    }
  }
  return best;
}

Presentation picard_table_relators() {
  Presentation pres = picard();
  pres.name = "picard_table";
  pres.relators = {{pres.parse("g4g2"), OrderSpec::finite(3)},
                   {pres.parse("g2g3"), OrderSpec::finite(2)},
                   {pres.parse("g2g1"), OrderSpec::finite(3)},
                   {pres.parse("g4g1"), OrderSpec::finite(2)}};
  return pres;
}

std::vector<Discrepancy> Report::discrepancies() const {
  std::vector<Discrepancy> out;
  for (const auto& t : tables) {
    for (const auto& r : t) out.insert(out.end(), r.discrepancies.begin(), r.discrepancies.end());
  }
  return out;
}

Report verify_all(int p) {
  Report report;
  report.p = p;
  for (int id = 1; id <= 3; ++id) {
    std::vector<RowResult> rows;
    for (const auto& row : printed_table(id)) rows.push_back(verify_row(row, p));
    report.tables.push_back(std::move(rows));
  }

  // Rows against census classes.
  for (int id = 1; id <= 3; ++id) {
    const Family family = table_family(id);
    const HeckeParam param = family == Family::Picard ? HeckeParam{} : HeckeParam{p};
    auto& results = report.tables[id - 1];
    for (int n = 2; n <= 4; ++n) {
      BijectionResult b;
      b.table = id;
      b.index = n;
      std::map<Homomorphism, int, bool (*)(const Homomorphism&, const Homomorphism&)> seen(
          [](const Homomorphism& a, const Homomorphism& c) { return a.images < c.images; });
      for (std::size_t i = 0; i < printed_table(id).size(); ++i) {
        const PrintedRow& row = printed_table(id)[i];
        if (row.index != n) continue;
        b.rows.push_back(row.row);
        Homomorphism hom;
        try {
          hom = row_hom(row, p);
        } catch (const UsageError&) {
          continue;
        }
        if (!is_valid(hom)) continue;
        const Homomorphism c = canonical_form(hom, DedupeMode::ConjugacyClasses);
        auto [it, fresh] = seen.emplace(c, row.row);
        if (!fresh) {
          results[i].discrepancies.push_back(
              {id, row.row, DiscrepancyKind::ClassMismatch,
               "conjugate to row " + std::to_string(it->second),
               "row " + std::to_string(it->second)});
        }
      }
      const CensusEntry census = lowindex::census(family, n, DedupeMode::ConjugacyClasses, param);
      b.distinct_classes = static_cast<int>(seen.size());
      b.census_classes = static_cast<int>(census.count());
      for (const auto& rep : census.representatives) {
        if (!seen.contains(rep)) b.missing.push_back(rep.to_string());
      }
      report.bijections.push_back(std::move(b));
    }
  }

  struct Claim {
    Family family;
    int n;
    DedupeMode mode;
    int printed;
  };
  const Claim claims[] = {
      {Family::ExtendedHecke, 2, DedupeMode::Subgroups, 7},
      {Family::ExtendedHecke, 3, DedupeMode::ConjugacyClasses, 3},
      {Family::ExtendedHecke, 4, DedupeMode::ConjugacyClasses, 22},
      {Family::Hecke, 2, DedupeMode::Subgroups, 3},
      {Family::Hecke, 3, DedupeMode::ConjugacyClasses, 3},
      {Family::Hecke, 4, DedupeMode::ConjugacyClasses, 10},
      {Family::Modular, 2, DedupeMode::Subgroups, 1},
      {Family::Modular, 3, DedupeMode::ConjugacyClasses, 2},
      {Family::Modular, 4, DedupeMode::ConjugacyClasses, 2},
      {Family::Picard, 2, DedupeMode::Subgroups, 3},
      {Family::Picard, 3, DedupeMode::ConjugacyClasses, 2},
      {Family::Picard, 4, DedupeMode::ConjugacyClasses, 7},
  };
  for (const auto& c : claims) {
    HeckeParam param;
    if (c.family == Family::ExtendedHecke || c.family == Family::Hecke) param = p;
    const auto entry = census(c.family, c.n, c.mode, param);
    report.census.push_back({c.family, c.n, c.mode, c.printed, static_cast<int>(entry.count())});
  }

  const auto defining = shared_presentation(Family::Picard, std::nullopt);
  const auto printed = std::make_shared<const Presentation>(picard_table_relators());
  for (const auto& [label, pres] : {std::pair{std::string("defining relators"), defining},
                                    std::pair{std::string("relators implied by table 3"), printed}}) {
    RelatorDiagnostic d{label, relator_texts(*pres), {}};
    d.counts = {picard_count(pres, 2, DedupeMode::Subgroups),
                picard_count(pres, 3, DedupeMode::ConjugacyClasses),
                picard_count(pres, 4, DedupeMode::ConjugacyClasses)};
    report.picard_relators.push_back(std::move(d));
  }
  return report;
}

std::string default_allowlist_path() {
  return std::string(LOWINDEX_DATA_DIR) + "/allowlist.json";
}

std::vector<AllowEntry> load_allowlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open allowlist " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("allowlist " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw UsageError("allowlist must be a JSON list");
  std::vector<AllowEntry> out;
  for (const auto& e : doc) {
    out.push_back({e.at("table").get<int>(), e.at("row").get<int>(),
                   parse_discrepancy_kind(e.at("kind").get<std::string>())});
  }
  return out;
}

std::vector<Discrepancy> outside_allowlist(const Report& report,
                                           const std::vector<AllowEntry>& allow) {
  std::vector<Discrepancy> out;
  for (const auto& d : report.discrepancies()) {
    bool listed = std::any_of(allow.begin(), allow.end(), [&](const AllowEntry& a) {
      return a.table == d.table && a.row == d.row && a.kind == d.kind;
    });
    if (!listed) out.push_back(d);
  }
  return out;
}

std::string report_text(const Report& report) {
  std::ostringstream os;
  os << "verification at p = " << report.p << "\n";
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    int ok = 0;
    for (const auto& r : report.tables[t]) ok += r.status() == "ok";
    os << "\ntable " << t + 1 << ": " << ok << " of " << report.tables[t].size()
       << " rows reproduced\n";
    for (const auto& r : report.tables[t]) {
      os << "  row " << r.row << ": " << r.status();
      if (r.illegible) os << " (" << r.illegible << " illegible)";
      os << "\n";
      for (const auto& d : r.discrepancies) {
        os << "    " << kind_name(d.kind) << ": " << d.detail;
        if (!d.recomputed.empty()) os << " [recomputed: " << d.recomputed << "]";
        os << "\n";
      }
    }
  }
  os << "\nclass bijection\n";
  for (const auto& b : report.bijections) {
    os << "  table " << b.table << " index " << b.index << ": " << b.rows.size()
       << " rows, " << b.distinct_classes << " distinct classes, census "
       << b.census_classes << (b.holds() ? "" : "  MISMATCH") << "\n";
    for (const auto& m : b.missing) os << "    no row for " << m << "\n";
  }
  os << "\ncensus\n";
  for (const auto& c : report.census) {
    os << "  " << family_name(c.family) << " n=" << c.index << " " << mode_name(c.mode)
       << ": printed " << c.printed << ", computed " << c.computed
       << (c.match() ? "" : "  MISMATCH") << "\n";
  }
  os << "\npicard relator sets (n = 2 subgroups, 3 classes, 4 classes)\n";
  for (const auto& d : report.picard_relators) {
    os << "  " << d.label << ":";
    for (const auto& r : d.relators) os << " " << r;
    os << " ->";
    for (int c : d.counts) os << " " << c;
    os << "\n";
  }
  return os.str();
}

}  // namespace lowindex
