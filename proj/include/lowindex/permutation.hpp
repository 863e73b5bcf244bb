#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lowindex/errors.hpp"

namespace lowindex {

inline constexpr int kMaxDegree = 12;

/// A bijection of the color set {1..n}. Points are 1-based throughout the
/// public interface; composition applies the right factor first.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(int degree = 1);

  /// Builds from 1-based images: images[i-1] is the image of point i.
  static Permutation from_images(std::span<const int> images);

  /// Parses whitespace-free cycle notation such as "(12)(34)" or "(1)".
  /// Degree is taken from `degree`, or from the largest point when 0.
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const { return degree_; }
  int operator()(int point) const;
  std::vector<int> images() const;

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;

  /// Cycles with the smallest point first, sorted by smallest point.
  std::vector<std::vector<int>> cycles() const;

  /// Cycle notation; fixed points are omitted except for the identity "(1)".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  int degree_;
  std::array<std::uint8_t, kMaxDegree> image_{};  // 0-based internally
};

/// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

/// s ∘ a ∘ s⁻¹.
Permutation conjugate(const Permutation& a, const Permutation& s);

/// True iff the orbit of point 1 under the group generated by `gens` is all
/// of {1..n}. An empty generator set is transitive only on one point.
bool is_transitive(std::span<const Permutation> gens, int n);

/// Orbit of `point` under the generated group, in breadth-first order.
std::vector<int> orbit(std::span<const Permutation> gens, int point);

/// Every permutation of degree n in lexicographic order of image tuples.
std::vector<Permutation> all_permutations(int n);

}  // namespace lowindex
