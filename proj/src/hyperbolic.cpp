#include "lowindex/hyperbolic.hpp"

#include <cmath>
#include <numbers>

namespace lowindex {

std::complex<double> Isometry::operator()(std::complex<double> z) const {
  if (reversing) z = std::conj(z);
  return (a * z + b) / (c * z + d);
}

Isometry Isometry::normalized() const {
  double s = std::sqrt(std::abs(det()));
  if (s == 0) throw UsageError("degenerate isometry");
  return {a / s, b / s, c / s, d / s, reversing};
}

Isometry Isometry::inverse() const {
  // Real coefficients: conjugation commutes with the matrix action, so the
  // inverse map uses the adjugate with the same orientation flag.
  return Isometry{d, -b, -c, a, reversing}.normalized();
}

bool Isometry::same_map(const Isometry& o, double tol) const {
  if (reversing != o.reversing) return false;
  auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
  bool plus = close(a, o.a) && close(b, o.b) && close(c, o.c) && close(d, o.d);
  bool minus =
      close(a, -o.a) && close(b, -o.b) && close(c, -o.c) && close(d, -o.d);
  return plus || minus;
}

Isometry compose(const Isometry& f, const Isometry& g) {
  Isometry r{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
             f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d,
             f.reversing != g.reversing};
  return r.normalized();
}

TriangleGenerators triangle_generators(int p) {
  if (p < 3) throw UsageError("triangle_generators: p must be at least 3");
  const double lambda = 2 * std::cos(std::numbers::pi / p);
  return {Isometry{-1, 0, 0, 1, true}, Isometry{-1, 0, lambda, 1, true},
          Isometry{0, 1, 1, 0, true}};
}

Isometry eval_word(const Word& w, int p) {
  const auto gens = triangle_generators(p);
  Isometry r;
  for (const auto& l : w.letters) {
    switch (l.gen) {
      case 0:
        r = compose(r, gens.P);
        break;
      case 1:
        r = compose(r, gens.Q);
        break;
      case 2:
        r = compose(r, gens.R);
        break;
      default:
        throw UsageError("eval_word: letter outside P, Q, R");
    }
  }
  return r;
}

std::string kind_name(IsometryKind k) {
  switch (k) {
    case IsometryKind::Identity:
      return "identity";
    case IsometryKind::Rotation:
      return "rotation";
    case IsometryKind::Parabolic:
      return "parabolic";
    case IsometryKind::Hyperbolic:
      return "hyperbolic";
    case IsometryKind::Reflection:
      return "reflection";
    case IsometryKind::Glide:
      return "glide";
  }
  return "?";
}

std::string IsometryClass::name() const {
  if (kind == IsometryKind::Rotation) {
    return rotation_order ? "rotation of order " + std::to_string(*rotation_order)
                          : "rotation (nonperiodic)";
  }
  return kind_name(kind);
}

std::optional<int> rotation_order(const Isometry& m, int p) {
  const double half = std::min(1.0, std::abs(m.normalized().trace()) / 2);
  const double theta = 2 * std::acos(half);
  const double two_pi = 2 * std::numbers::pi;
  for (int k = 1; k <= 2 * p; ++k) {
    double turns = k * theta / two_pi;
    if (std::abs(turns - std::round(turns)) * two_pi <= kAngleTolerance &&
        std::round(turns) >= 1) {
      return k;
    }
  }
  return std::nullopt;
}

IsometryClass classify(const Isometry& m0, int p, double tol) {
  const Isometry m = m0.normalized();
  IsometryClass out;
  out.trace = m.trace();
  if (m.reversing) {
    out.kind = compose(m, m).is_identity(tol) ? IsometryKind::Reflection
                                              : IsometryKind::Glide;
    return out;
  }
  if (m.is_identity(tol)) {
    out.kind = IsometryKind::Identity;
    return out;
  }
  const double t = std::abs(out.trace);
  if (t < 2 - tol) {
    out.kind = IsometryKind::Rotation;
    out.rotation_order = rotation_order(m, p);
  } else if (t > 2 + tol) {
    out.kind = IsometryKind::Hyperbolic;
  } else {
    out.kind = IsometryKind::Parabolic;
  }
  return out;
}

}  // namespace lowindex
