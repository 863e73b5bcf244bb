#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lowindex/stabilizer.hpp"
#include "lowindex/words.hpp"

namespace lowindex {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Coset table for an HLT enumeration. Involution generators own a single
/// column; every other generator owns a column for itself and one for its
/// inverse.
class CosetTable {
 public:
  static constexpr int kUndefined = -1;

  explicit CosetTable(const Alphabet& alphabet);

  int columns() const { return static_cast<int>(inverse_col_.size()); }
  int column_of(const Letter& l) const;
  int inverse_column(int col) const { return inverse_col_[col]; }

  std::size_t defined() const { return parent_.size(); }
  std::size_t live() const { return live_; }
  std::size_t coincidences() const { return coincidences_; }
  bool alive(int c) const { return parent_[c] == c; }
  int entry(int c, int col) const { return at(c, col); }

  int define(int c, int col);
  void scan_and_fill(int c, const std::vector<int>& cols);
  /// Follows `cols` from coset c; empty if an entry is undefined.
  std::optional<int> trace(int c, const std::vector<int>& cols) const;

  /// Live cosets renumbered 0..live-1 in order of definition.
  std::vector<std::vector<int>> compact() const;

 private:
  int rep(int c);
  void merge(int a, int b, std::vector<int>& queue);
  void coincidence(int a, int b);
  void set(int c, int col, int d);
  int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * inverse_col_.size() + col]; }
  int at(int c, int col) const { return table_[static_cast<std::size_t>(c) * inverse_col_.size() + col]; }

  std::vector<int> inverse_col_;
  std::vector<int> first_col_;  // by generator id
  std::vector<int> table_;  // row-major, columns() entries per coset
  std::vector<int> parent_;
  std::size_t live_ = 0;
  std::size_t coincidences_ = 0;
};

struct EnumerationResult {
  /// Index of the subgroup, or empty on overflow.
  std::optional<std::size_t> index;
  std::size_t cosets_defined = 0;
  std::size_t coincidences = 0;
  /// Compacted table of a completed enumeration (coset 0 is the subgroup).
  std::vector<std::vector<int>> table;

  bool overflow() const { return !index.has_value(); }
};

/// HLT coset enumeration of the subgroup generated by `subgroup_words`.
/// Every relator needs a concrete order; stops with overflow once more than
/// `max_cosets` cosets have been defined.
EnumerationResult todd_coxeter(const Presentation& pres,
                               const std::vector<Word>& subgroup_words,
                               std::size_t max_cosets = kDefaultMaxCosets);

/// Compares the Todd–Coxeter index of record.generators against
/// record.index over `concrete` (every relator order fixed), stores the
/// outcome in record.verified and returns it. Overflow gives Inconclusive.
/// An index-1 record with no generators stands for the whole group.
Verification verify_index(SubgroupRecord& record, const Presentation& concrete,
                          std::size_t max_cosets = kDefaultMaxCosets);

/// Follows a word through a completed table from coset 0.
int trace_word(const EnumerationResult& result, const Presentation& pres,
               const Word& w);

}  // namespace lowindex
