#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowindex/permutation.hpp"
#include "lowindex/words.hpp"

namespace lowindex {

/// A coloring assignment: one permutation of {1..n} per generator.
struct Homomorphism {
  PresentationPtr presentation;
  std::vector<Permutation> images;
  /// Least d such that the assignment is valid exactly when d | p; empty for
  /// families without a parameter.
  std::optional<int> divisibility;

  int degree() const { return images.empty() ? 1 : images.front().degree(); }
  const Permutation& image(int gen) const { return images.at(gen); }

  /// "P=(12),Q=(1),R=(12)".
  std::string to_string() const;
};

/// Product of generator images with the rightmost letter acting first.
Permutation eval(const Word& w, const Homomorphism& hom);

/// Parses "name=cycles,name=cycles,...". Generators left out map to the
/// identity. `degree` 0 means the largest point mentioned. Names may also be
/// reflection spellings of the Hecke generators (QR for x, RP for y).
Homomorphism parse_assignment(std::string_view text, PresentationPtr pres,
                              int degree = 0);

/// Least common multiple of the orders of parametric relator images, or
/// empty when the presentation has no parameter.
std::optional<int> parametric_divisibility(const Homomorphism& hom);

/// Finite relators map to the identity, parametric relators respect p when it
/// is concrete, and the images act transitively.
bool is_valid(const Homomorphism& hom);

}  // namespace lowindex
