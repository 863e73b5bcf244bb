#pragma once

#include <complex>
#include <optional>
#include <string>

#include "lowindex/words.hpp"

namespace lowindex {

inline constexpr double kDetTolerance = 1e-9;
inline constexpr double kAngleTolerance = 1e-7;

/// Isometry of the upper half-plane: z ↦ (az+b)/(cz+d), or with z replaced by
/// its conjugate when `reversing`. Coefficients are real and normalized to
/// |ad − bc| = 1; the matrix is only meaningful up to sign.
struct Isometry {
  double a = 1, b = 0, c = 0, d = 1;
  bool reversing = false;

  static Isometry identity() { return {}; }

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  std::complex<double> operator()(std::complex<double> z) const;
  Isometry normalized() const;
  Isometry inverse() const;

  /// Equal as maps: matrices agree up to a global sign within `tol`.
  bool same_map(const Isometry& other, double tol = kDetTolerance) const;
  bool is_identity(double tol = kDetTolerance) const {
    return same_map(identity(), tol);
  }
};

/// this ∘ other, renormalized.
Isometry compose(const Isometry& f, const Isometry& g);

struct TriangleGenerators {
  Isometry P, Q, R;
};

/// Reflections in the sides of the triangle with angles π/2, π/p, 0:
/// P(z) = −z̄, Q(z) = −z̄/(1 + λz̄) with λ = 2cos(π/p), R(z) = 1/z̄.
TriangleGenerators triangle_generators(int p);

/// Composition over the P, Q, R alphabet, rightmost letter first.
Isometry eval_word(const Word& w, int p);

enum class IsometryKind { Identity, Rotation, Parabolic, Hyperbolic, Reflection, Glide };

struct IsometryClass {
  IsometryKind kind = IsometryKind::Identity;
  /// For rotations: the order, or empty when no k ≤ 2p closes the angle.
  std::optional<int> rotation_order;
  double trace = 2;

  std::string name() const;
};

std::string kind_name(IsometryKind k);

/// Rotation order of an elliptic element: least k ≤ 2p with k·θ ≡ 0 mod 2π,
/// θ recovered from |trace| = 2|cos(θ/2)|.
std::optional<int> rotation_order(const Isometry& m, int p);

IsometryClass classify(const Isometry& m, int p, double tol = kDetTolerance);

}  // namespace lowindex
