#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowindex/homomorphism.hpp"

namespace lowindex {

enum class DedupeMode { Subgroups, ConjugacyClasses };

std::string mode_name(DedupeMode m);
DedupeMode parse_mode(std::string_view name);

struct CensusEntry {
  Family family;
  int degree = 1;
  DedupeMode mode = DedupeMode::ConjugacyClasses;
  HeckeParam p;
  /// d such that every representative is valid when d | p; empty when the
  /// count is unconditional (d = 1, concrete p, or no parameter).
  std::optional<int> condition;
  std::vector<Homomorphism> representatives;

  std::size_t count() const { return representatives.size(); }
  std::string condition_text() const;
};

/// Every transitive assignment of generator images of degree n satisfying the
/// relators, in lexicographic order of image tuples. With symbolic p each
/// result records the divisibility it needs.
std::vector<Homomorphism> enumerate_homs(const PresentationPtr& pres, int n);

/// Lexicographically least image tuple over simultaneous conjugation by the
/// acting group (point-1 stabilizer for Subgroups, all of S_n otherwise).
Homomorphism canonical_form(const Homomorphism& hom, DedupeMode mode);

/// One canonical representative per orbit, sorted.
std::vector<Homomorphism> dedupe(const std::vector<Homomorphism>& homs,
                                 DedupeMode mode);

/// enumerate_homs + dedupe for one of the four families. `p` empty means
/// symbolic for the Hecke families; Picard and modular ignore it and reject a
/// conflicting value.
CensusEntry census(Family family, int n, DedupeMode mode, HeckeParam p);

}  // namespace lowindex
