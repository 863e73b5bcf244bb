#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowindex/hyperbolic.hpp"
#include "lowindex/orbifold.hpp"

namespace lowindex {

/// A statement that a word is a reflection, rotation of some order, etc.
struct ElementClaim {
  std::string word;
  IsometryKind kind;
  std::optional<ConeOrder> order;  // rotations only
};

/// One printed row, cells kept as printed.
struct PrintedRow {
  int table = 1;
  int row = 1;
  int index = 2;
  /// Generator images in column order: P, Q, R (table 1); QR, RP (table 2);
  /// g1..g4 (table 3).
  std::vector<std::string> assignment;
  /// Columns implied by the assignment: QP (table 2); X', U', Y', W'
  /// (table 3).
  std::vector<std::string> derived;
  std::string generators;
  std::string region;
  std::string orbifold;
  /// Element types stated in the accompanying text.
  std::vector<ElementClaim> prose;
  /// Orbifold symbol given in the text, when it gives one.
  std::string prose_orbifold = {};
};

const std::vector<PrintedRow>& printed_table(int id);

/// Family the rows of a table are colorings of.
Family table_family(int id);

/// Column names of the assignment and derived cells.
std::vector<std::string> assignment_columns(int id);
std::vector<std::string> derived_columns(int id);

/// Strips TeX markup: "$2^*(p/4)^\infty$" becomes "2*(p/4)∞". Text that was
/// not typeset is returned with only whitespace removed.
std::string normalize_orbifold(std::string_view raw);

/// Splits a generator cell on commas after removing '$' and whitespace.
std::vector<std::string> split_words(std::string_view raw);

/// Writes out "(QR)^3" style powers; nested groups are allowed.
std::string expand_powers(std::string_view text);

/// Words of a table 1 region cell "Δ ∪ Q(Δ) ∪ QP(Δ)": "", "Q", "QP".
std::vector<std::string> region_words(std::string_view raw);

}  // namespace lowindex
