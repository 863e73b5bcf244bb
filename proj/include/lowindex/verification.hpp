#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowindex/enumeration.hpp"
#include "lowindex/printed_tables.hpp"

namespace lowindex {

enum class DiscrepancyKind {
  AssignmentInvalid,
  AssignmentIllegible,
  GeneratorFailsFix,
  IndexMismatch,
  ChiInconsistent,
  SignatureMismatch,
  StringUnparseable,
  ElementTypeMismatch,
  RegionMismatch,
  DerivedMismatch,
  ClassMismatch,
};

std::string kind_name(DiscrepancyKind k);
DiscrepancyKind parse_discrepancy_kind(std::string_view name);

struct Discrepancy {
  int table = 0;
  int row = 0;
  DiscrepancyKind kind;
  std::string detail;
  /// Ground truth computed by the engine; empty when there is none.
  std::string recomputed;
};

struct RowResult {
  int table = 0;
  int row = 0;
  std::vector<Discrepancy> discrepancies;
  /// Cells or words that could not be read and were left out.
  int illegible = 0;
  bool skipped = false;

  std::string status() const;
};

/// Checks, in order: assignment validity and transitivity, claimed
/// generators fix color 1, Todd–Coxeter index of the claimed generators,
/// element types stated in the text, χ of the orbifold string, and for
/// Hecke rows the recomputed signature. `p` is used for tables 1 and 2.
RowResult verify_row(const PrintedRow& row, int p);

struct CensusClaim {
  Family family;
  int index = 2;
  DedupeMode mode = DedupeMode::ConjugacyClasses;
  int printed = 0;
  int computed = 0;
  bool match() const { return printed == computed; }
};

/// Rows of one table and index against the census classes.
struct BijectionResult {
  int table = 0;
  int index = 2;
  std::vector<int> rows;
  int distinct_classes = 0;
  int census_classes = 0;
  /// Census classes no row lands in.
  std::vector<std::string> missing;
  bool holds() const {
    return distinct_classes == static_cast<int>(rows.size()) &&
           distinct_classes == census_classes;
  }
};

/// Picard counts at n = 2, 3, 4 (subgroups, classes, classes) under a
/// relator set.
struct RelatorDiagnostic {
  std::string label;
  std::vector<std::string> relators;
  std::vector<int> counts;
};

struct Report {
  int p = 12;
  std::vector<std::vector<RowResult>> tables;  // tables 1, 2, 3
  std::vector<CensusClaim> census;
  std::vector<BijectionResult> bijections;
  std::vector<RelatorDiagnostic> picard_relators;

  std::vector<Discrepancy> discrepancies() const;
};

Report verify_all(int p);

/// The relator set Table 3's derived columns follow:
/// (g4g2)^3, (g2g3)^2, (g2g1)^3, (g4g1)^2.
Presentation picard_table_relators();

/// Least Hamming distance valid transitive assignment to `images`, first in
/// enumeration order on ties.
std::optional<Homomorphism> nearest_valid(const PresentationPtr& pres,
                                          const std::vector<Permutation>& images);

struct AllowEntry {
  int table = 0;
  int row = 0;
  DiscrepancyKind kind;
};

std::vector<AllowEntry> load_allowlist(const std::string& path);
std::string default_allowlist_path();

/// Discrepancies with no matching allowlist entry.
std::vector<Discrepancy> outside_allowlist(const Report& report,
                                           const std::vector<AllowEntry>& allow);

/// Human-readable rendering.
std::string report_text(const Report& report);

}  // namespace lowindex
