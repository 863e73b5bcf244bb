#include "lowindex/coset_enumeration.hpp"

#include <algorithm>

namespace lowindex {

CosetTable::CosetTable(const Alphabet& alphabet) {
  for (const auto& s : alphabet.symbols()) {
    int col = static_cast<int>(inverse_col_.size());
    first_col_.push_back(col);
    if (s.involution) {
      inverse_col_.push_back(col);
    } else {
      inverse_col_.push_back(col + 1);
      inverse_col_.push_back(col);
    }
  }
  table_.assign(columns(), kUndefined);
  parent_.push_back(0);
  live_ = 1;
}

int CosetTable::column_of(const Letter& l) const {
  int col = first_col_.at(l.gen);
  return l.exp < 0 ? inverse_col_[col] : col;
}

void CosetTable::set(int c, int col, int d) {
  at(c, col) = d;
  at(d, inverse_col_[col]) = c;
}

int CosetTable::define(int c, int col) {
  int d = static_cast<int>(parent_.size());
  table_.resize(table_.size() + columns(), kUndefined);
  parent_.push_back(d);
  ++live_;
  set(c, col, d);
  return d;
}

int CosetTable::rep(int c) {
  int r = c;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[c] != r) {
    int next = parent_[c];
    parent_[c] = r;
    c = next;
  }
  return r;
}

void CosetTable::merge(int a, int b, std::vector<int>& queue) {
  a = rep(a);
  b = rep(b);
  if (a == b) return;
  int keep = std::min(a, b);
  int drop = std::max(a, b);
  parent_[drop] = keep;
  --live_;
  ++coincidences_;
  queue.push_back(drop);
}

void CosetTable::coincidence(int a, int b) {
  std::vector<int> queue;
  merge(a, b, queue);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int e = queue[i];
    for (int col = 0; col < columns(); ++col) {
      int f = at(e, col);
      if (f == kUndefined) continue;
      int icol = inverse_col_[col];
      if (at(f, icol) == e) at(f, icol) = kUndefined;
      int c = rep(e);
      int d = rep(f);
      if (at(c, col) != kUndefined) {
        merge(d, at(c, col), queue);
      } else if (at(d, icol) != kUndefined) {
        merge(c, at(d, icol), queue);
      } else {
        set(c, col, d);
      }
    }
  }
}

void CosetTable::scan_and_fill(int c, const std::vector<int>& cols) {
  if (cols.empty()) return;
  int f = c;
  int b = c;
  int i = 0;
  int j = static_cast<int>(cols.size()) - 1;
  for (;;) {
    while (i <= j && at(f, cols[i]) != kUndefined) {
      f = at(f, cols[i]);
      ++i;
    }
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, inverse_col_[cols[j]]) != kUndefined) {
      b = at(b, inverse_col_[cols[j]]);
      --j;
    }
    if (j < i) {
      coincidence(f, b);
      return;
    }
    if (i == j) {
      set(f, cols[i], b);
      return;
    }
    define(f, cols[i]);
  }
}

std::optional<int> CosetTable::trace(int c, const std::vector<int>& cols) const {
  for (int col : cols) {
    c = at(c, col);
    if (c == kUndefined) return std::nullopt;
  }
  return c;
}

std::vector<std::vector<int>> CosetTable::compact() const {
  std::vector<int> number(parent_.size(), -1);
  int next = 0;
  for (std::size_t c = 0; c < parent_.size(); ++c) {
    if (parent_[c] == static_cast<int>(c)) number[c] = next++;
  }
  std::vector<std::vector<int>> out;
  for (std::size_t c = 0; c < parent_.size(); ++c) {
    if (number[c] < 0) continue;
    std::vector<int> row(columns());
    for (int col = 0; col < columns(); ++col) {
      int d = at(static_cast<int>(c), col);
      row[col] = d == kUndefined ? kUndefined : number[d];
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<int> to_columns(const CosetTable& t, const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (const auto& l : w.letters) cols.push_back(t.column_of(l));
  return cols;
}

}  // namespace

EnumerationResult todd_coxeter(const Presentation& pres,
                               const std::vector<Word>& subgroup_words,
                               std::size_t max_cosets) {
  CosetTable t(pres.alphabet);
  std::vector<std::vector<int>> relators;
  for (const auto& rel : pres.relators) {
    if (!rel.order.value) {
      throw UsageError("todd_coxeter needs a concrete p for " + pres.name);
    }
    relators.push_back(to_columns(t, power(rel.word, *rel.order.value)));
  }

  EnumerationResult result;
  auto overflowed = [&] { return t.defined() > max_cosets; };

  for (const auto& w : subgroup_words) {
    t.scan_and_fill(0, to_columns(t, free_reduce(w, pres.alphabet)));
    if (overflowed()) break;
  }
  for (int c = 0; !overflowed() && c < static_cast<int>(t.defined()); ++c) {
    for (const auto& rel : relators) {
      if (!t.alive(c)) break;
      t.scan_and_fill(c, rel);
      if (overflowed()) break;
    }
    for (int col = 0; t.alive(c) && !overflowed() && col < t.columns(); ++col) {
      if (t.entry(c, col) == CosetTable::kUndefined) t.define(c, col);
    }
  }

  result.cosets_defined = t.defined();
  result.coincidences = t.coincidences();
  if (overflowed()) return result;
  result.index = t.live();
  result.table = t.compact();
  return result;
}

Verification verify_index(SubgroupRecord& record, const Presentation& concrete,
                          std::size_t max_cosets) {
  std::vector<Word> words = record.generators;
  if (words.empty() && record.index == 1) {
    for (const auto& s : concrete.alphabet.symbols()) {
      words.push_back(Word{{{s.id, 1}}});
    }
  }
  const auto result = todd_coxeter(concrete, words, max_cosets);
  if (result.overflow()) {
    record.verified = Verification::Inconclusive;
  } else if (*result.index == static_cast<std::size_t>(record.index)) {
    record.verified = Verification::Verified;
  } else {
    record.verified = Verification::Mismatch;
  }
  return record.verified;
}

int trace_word(const EnumerationResult& result, const Presentation& pres,
               const Word& w) {
  if (result.overflow()) throw UsageError("trace_word: enumeration overflowed");
  CosetTable shape(pres.alphabet);
  int c = 0;
  for (const auto& l : w.letters) c = result.table.at(c).at(shape.column_of(l));
  return c;
}

}  // namespace lowindex
