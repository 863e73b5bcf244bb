#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowindex/homomorphism.hpp"

namespace lowindex {

class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::string to_string() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// constant + over_p / p, exact.
struct PExpr {
  Rational constant;
  Rational over_p;

  /// Substitutes a concrete p.
  Rational at(int p) const { return constant + over_p / Rational(p); }
  std::string to_string() const;

  friend PExpr operator+(const PExpr& a, const PExpr& b) {
    return {a.constant + b.constant, a.over_p + b.over_p};
  }
  friend PExpr operator-(const PExpr& a, const PExpr& b) {
    return {a.constant - b.constant, a.over_p - b.over_p};
  }
  friend PExpr operator*(Rational k, const PExpr& e) {
    return {k * e.constant, k * e.over_p};
  }
  friend bool operator==(const PExpr&, const PExpr&) = default;
};

/// A rotation order: a concrete integer, or p/divisor when symbolic.
/// `from_p` marks concrete values obtained by folding p/divisor.
struct ConeOrder {
  int value = 2;
  bool symbolic = false;
  bool from_p = false;

  static ConeOrder concrete(int k) { return {k, false, false}; }
  static ConeOrder p_over(int divisor) { return {divisor, true, false}; }

  /// 1 − 1/order.
  PExpr cost() const;
  std::string to_string() const;
};

/// Orientable orbifold: genus handles, cone points, cusps.
struct Signature {
  int genus = 0;
  std::vector<ConeOrder> cones;
  int cusps = 0;

  /// 'o' per handle, cones by descending order, then '∞' per cusp.
  std::string conway() const;
  PExpr chi() const;
};

enum class ConwayTokenKind { Handle, Cone, InfiniteCone, Mirror, Corner, InfiniteCorner, CrossCap };

struct ConwayToken {
  ConwayTokenKind kind;
  ConeOrder order{};  // Cone / Corner only
};

struct ConwaySymbol {
  std::vector<ConwayToken> tokens;
};

/// Parses Conway orbifold notation over digits (each bare digit is one cone),
/// "p", "(p)", "(p/k)", "(k)", "∞", "*", "o" and "x". With concrete p the
/// p-forms fold to integers.
ConwaySymbol conway_parse(std::string_view s, HeckeParam p);

/// Orbifold Euler characteristic.
PExpr conway_chi(const ConwaySymbol& sym);
PExpr conway_chi(std::string_view s);

/// χ of the full group for the family ("*2p∞" or "2p∞").
PExpr parent_chi(Family family);

/// conway_chi(row string) == n · χ(parent), symbolically in p. Throws
/// ParseError when the string does not parse.
bool chi_consistency(std::string_view conway, int n, Family family);

/// Cone points from cycles of x = QR, order-2 cones from fixed points of
/// y = RP, cusps from cycles of QP, genus from Riemann–Hurwitz. Throws
/// InvalidHom when the genus is not a nonnegative integer.
Signature signature_from_hom(const Homomorphism& hecke_hom);

class InvalidHom : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff no odd-length word fixes color 1: (1,+) and (1,−) lie in different
/// orbits of the doubled action (c, s) ↦ (π(g)(c), −s).
bool orientation_preserving(const Homomorphism& extended_hom);

/// The Hecke-group action of an extended Hecke assignment whose stabilizer is
/// orientation-preserving: x = QR and y = RP on the orbit of color 1,
/// relabeled by first visit.
Homomorphism k_restriction(const Homomorphism& extended_hom);

}  // namespace lowindex
