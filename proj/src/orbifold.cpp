#include "lowindex/orbifold.hpp"

#include <algorithm>
#include <numeric>

#include "lowindex/enumeration.hpp"

namespace lowindex {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(Rational a, Rational b) { return a + (-b); }
Rational operator*(Rational a, Rational b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(Rational a, Rational b) {
  if (b.num_ == 0) throw UsageError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string PExpr::to_string() const {
  std::string out;
  if (over_p.num() != 0) {
    std::int64_t n = over_p.num();
    if (n < 0) out += "-";
    out += std::to_string(n < 0 ? -n : n);
    out += over_p.den() == 1 ? "/p" : "/(" + std::to_string(over_p.den()) + "p)";
  }
  if (constant.num() != 0 || out.empty()) {
    Rational c = constant;
    if (!out.empty()) {
      out += c.num() < 0 ? " - " : " + ";
      if (c.num() < 0) c = -c;
    }
    out += c.to_string();
  }
  return out;
}

PExpr ConeOrder::cost() const {
  if (symbolic) return {Rational(1), Rational(-value)};
  return {Rational(1) - Rational(1, value), Rational(0)};
}

std::string ConeOrder::to_string() const {
  if (symbolic) {
    return value == 1 ? "p" : "(p/" + std::to_string(value) + ")";
  }
  if (from_p || value >= 10) return "(" + std::to_string(value) + ")";
  return std::to_string(value);
}

namespace {

const std::string kInfinity = "\xE2\x88\x9E";

// Symbolic orders first (p/1 > p/2 > ...), then concrete orders descending.
bool cone_before(const ConeOrder& a, const ConeOrder& b) {
  if (a.symbolic != b.symbolic) return a.symbolic;
  if (a.symbolic) return a.value < b.value;
  if (a.value != b.value) return a.value > b.value;
  return a.from_p && !b.from_p;
}

}  // namespace

std::string Signature::conway() const {
  std::string s(genus, 'o');
  auto sorted = cones;
  std::stable_sort(sorted.begin(), sorted.end(), cone_before);
  for (const auto& c : sorted) s += c.to_string();
  for (int i = 0; i < cusps; ++i) s += kInfinity;
  return s;
}

PExpr Signature::chi() const {
  PExpr chi{Rational(2 - 2 * genus - cusps), Rational(0)};
  for (const auto& c : cones) chi = chi - c.cost();
  return chi;
}

ConwaySymbol conway_parse(std::string_view s, HeckeParam p) {
  if (s.empty()) throw ParseError("empty orbifold string", 0);
  ConwaySymbol sym;
  // 0: handles, 1: cones, 2: after a mirror, 3: cross-caps.
  int phase = 0;
  std::size_t i = 0;

  auto p_order = [&](int divisor, std::size_t at) {
    if (divisor <= 0) throw ParseError("bad divisor", at);
    if (!p) return ConeOrder::p_over(divisor);
    if (*p % divisor != 0) {
      throw ParseError("p/" + std::to_string(divisor) + " is not an integer", at);
    }
    return ConeOrder{*p / divisor, false, true};
  };
  auto read_int = [&](std::size_t& j) {
    std::size_t start = j;
    int v = 0;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
      v = v * 10 + (s[j] - '0');
      if (v > 1000000) throw ParseError("number too large", start);
      ++j;
    }
    if (j == start) throw ParseError("expected a number", start);
    return v;
  };
  auto push_order = [&](ConeOrder order, std::size_t at) {
    if (phase == 3) throw ParseError("rotation after cross-cap", at);
    if (phase <= 1) {
      phase = 1;
      sym.tokens.push_back({ConwayTokenKind::Cone, order});
    } else {
      sym.tokens.push_back({ConwayTokenKind::Corner, order});
    }
  };

  while (i < s.size()) {
    const std::size_t at = i;
    const char c = s[i];
    if (c == 'o') {
      if (phase != 0) throw ParseError("handle after other features", at);
      sym.tokens.push_back({ConwayTokenKind::Handle, {}});
      ++i;
    } else if (c >= '1' && c <= '9') {
      push_order(ConeOrder::concrete(c - '0'), at);
      ++i;
    } else if (c == 'p') {
      push_order(p_order(1, at), at);
      ++i;
    } else if (c == '(') {
      std::size_t j = i + 1;
      ConeOrder order;
      if (j < s.size() && s[j] == 'p') {
        ++j;
        int divisor = 1;
        if (j < s.size() && s[j] == '/') {
          ++j;
          divisor = read_int(j);
        }
        order = p_order(divisor, at);
      } else {
        int k = read_int(j);
        if (k < 1) throw ParseError("rotation order must be positive", at);
        order = ConeOrder::concrete(k);
      }
      if (j >= s.size() || s[j] != ')') throw ParseError("expected ')'", j);
      push_order(order, at);
      i = j + 1;
    } else if (s.substr(i, kInfinity.size()) == kInfinity) {
      if (phase == 3) throw ParseError("cusp after cross-cap", at);
      if (phase <= 1) {
        phase = 1;
        sym.tokens.push_back({ConwayTokenKind::InfiniteCone, {}});
      } else {
        sym.tokens.push_back({ConwayTokenKind::InfiniteCorner, {}});
      }
      i += kInfinity.size();
    } else if (c == '*') {
      if (phase == 3) throw ParseError("mirror after cross-cap", at);
      phase = 2;
      sym.tokens.push_back({ConwayTokenKind::Mirror, {}});
      ++i;
    } else if (c == 'x') {
      phase = 3;
      sym.tokens.push_back({ConwayTokenKind::CrossCap, {}});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
  return sym;
}

PExpr conway_chi(const ConwaySymbol& sym) {
  PExpr chi{Rational(2), Rational(0)};
  for (const auto& t : sym.tokens) {
    switch (t.kind) {
      case ConwayTokenKind::Handle:
        chi = chi - PExpr{Rational(2), Rational(0)};
        break;
      case ConwayTokenKind::Cone:
        chi = chi - t.order.cost();
        break;
      case ConwayTokenKind::InfiniteCone:
      case ConwayTokenKind::Mirror:
      case ConwayTokenKind::CrossCap:
        chi = chi - PExpr{Rational(1), Rational(0)};
        break;
      case ConwayTokenKind::Corner:
        chi = chi - Rational(1, 2) * t.order.cost();
        break;
      case ConwayTokenKind::InfiniteCorner:
        chi = chi - PExpr{Rational(1, 2), Rational(0)};
        break;
    }
  }
  return chi;
}

PExpr conway_chi(std::string_view s) {
  return conway_chi(conway_parse(s, std::nullopt));
}

PExpr parent_chi(Family family) {
  switch (family) {
    case Family::ExtendedHecke:
      return conway_chi("*2p\xE2\x88\x9E");
    case Family::Hecke:
    case Family::Modular:
      return conway_chi("2p\xE2\x88\x9E");
    case Family::Picard:
      break;
  }
  throw UsageError("no two-dimensional orbifold for the picard family");
}

bool chi_consistency(std::string_view conway, int n, Family family) {
  const PExpr expected = Rational(n) * parent_chi(family);
  const PExpr got = conway_chi(conway);
  if (family == Family::Modular) {
    return got.at(3) == expected.at(3);
  }
  return got == expected;
}

Signature signature_from_hom(const Homomorphism& hom) {
  const Presentation& pres = *hom.presentation;
  if (pres.name != "hecke" && pres.name != "modular") {
    throw UsageError("signature_from_hom: expected a hecke assignment");
  }
  const int n = hom.degree();
  const HeckeParam p = pres.p;
  const Permutation& x = hom.image(0);
  const Permutation& y = hom.image(1);

  Signature sig;
  for (const auto& cyc : x.cycles()) {
    const int len = static_cast<int>(cyc.size());
    if (!p) {
      sig.cones.push_back(ConeOrder::p_over(len));
      continue;
    }
    if (*p % len != 0) {
      throw InvalidHom("cycle of x with length not dividing p");
    }
    if (len < *p) sig.cones.push_back({*p / len, false, true});
  }
  for (const auto& cyc : y.cycles()) {
    if (cyc.size() == 1) sig.cones.push_back(ConeOrder::concrete(2));
  }
  sig.cusps = static_cast<int>(compose(x, y).cycles().size());

  // 2g = 2 − Σ cost − cusps − n·χ(parent)
  PExpr twice_genus{Rational(2 - sig.cusps), Rational(0)};
  for (const auto& c : sig.cones) twice_genus = twice_genus - c.cost();
  twice_genus = twice_genus - Rational(n) * parent_chi(Family::Hecke);
  const Rational g2 = p ? twice_genus.at(*p) : twice_genus.constant;
  if ((!p && twice_genus.over_p != Rational(0)) || !g2.is_integer() ||
      g2.num() < 0 || g2.num() % 2 != 0) {
    throw InvalidHom("Riemann-Hurwitz gives no integer genus for " +
                     hom.to_string());
  }
  sig.genus = static_cast<int>(g2.num() / 2);
  return sig;
}

bool orientation_preserving(const Homomorphism& hom) {
  const int n = hom.degree();
  // State (c, s) is encoded as 2(c−1) + s with s ∈ {0, 1}.
  std::vector<bool> seen(2 * n, false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int c = queue[head] / 2 + 1;
    const int s = queue[head] % 2;
    for (const auto& g : hom.images) {
      for (const Permutation& m : {g, g.inverse()}) {
        const int next = 2 * (m(c) - 1) + (1 - s);
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
  }
  return !seen[1];
}

Homomorphism k_restriction(const Homomorphism& hom) {
  const Presentation& pres = *hom.presentation;
  if (pres.name != "extended_hecke") {
    throw UsageError("k_restriction: expected an extended_hecke assignment");
  }
  const int n = hom.degree();
  if (n % 2 != 0 || !orientation_preserving(hom)) {
    throw UsageError(
        "k_restriction: stabilizer is not orientation-preserving");
  }
  const Permutation& P = hom.image(0);
  const Permutation& Q = hom.image(1);
  const Permutation& R = hom.image(2);
  const Permutation x = compose(Q, R);
  const Permutation y = compose(R, P);

  std::vector<int> label(n + 1, 0);
  std::vector<int> order{1};
  label[1] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int c = order[head];
    for (const Permutation& m : {x, x.inverse(), y}) {
      const int d = m(c);
      if (label[d] == 0) {
        label[d] = static_cast<int>(order.size()) + 1;
        order.push_back(d);
      }
    }
  }
  const int m = static_cast<int>(order.size());
  if (2 * m != n) {
    throw UsageError("k_restriction: orbit of color 1 has unexpected size");
  }
  auto restrict = [&](const Permutation& g) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = label[g(order[i])];
    return Permutation::from_images(images);
  };

  Homomorphism out;
  out.presentation = shared_presentation(Family::Hecke, pres.p);
  out.images = {restrict(x), restrict(y)};
  out.divisibility = parametric_divisibility(out);
  return canonical_form(out, DedupeMode::Subgroups);
}

}  // namespace lowindex
