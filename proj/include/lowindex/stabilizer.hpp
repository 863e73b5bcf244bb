#pragma once

#include <optional>
#include <vector>

#include "lowindex/homomorphism.hpp"

namespace lowindex {

/// Right-coset transversal: words[i-1] is the representative of the coset
/// L·t with eval(t)⁻¹(1) = i, where L fixes color 1. Prefix-closed.
struct Transversal {
  std::vector<Word> words;

  /// Color labelling the coset of `w`: eval(w)⁻¹(1).
  static int color_of(const Word& w, const Homomorphism& hom);
  const Word& rep(int color) const { return words.at(color - 1); }
};

enum class Verification { Unchecked, Verified, Mismatch, Inconclusive };

struct SubgroupRecord {
  Homomorphism hom;
  Transversal transversal;
  std::vector<Word> generators;
  int index = 1;
  /// Only meaningful for the two-dimensional families.
  std::optional<bool> orientation_preserving;
  Verification verified = Verification::Unchecked;
};

/// Breadth-first from color 1, letters in declaration order with each
/// non-involution generator followed by its inverse.
Transversal schreier_transversal(const Homomorphism& hom);

/// t·g·rep(t·g)⁻¹ over transversal words t and generators g, freely reduced,
/// without identities or inverse duplicates.
std::vector<Word> schreier_generators(const Homomorphism& hom);

/// Transversal words in color order: the tiles t·Δ forming a fundamental
/// region of the color-1 stabilizer.
std::vector<Word> fundamental_region(const Homomorphism& hom);

/// Transversal, generators and index; orientation is filled in for the
/// extended Hecke and Hecke families.
SubgroupRecord make_subgroup_record(const Homomorphism& hom);

}  // namespace lowindex
