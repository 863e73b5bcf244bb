#include "lowindex/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace lowindex {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw UsageError("permutation degree " + std::to_string(degree) +
                     " outside 1.." + std::to_string(kMaxDegree));
  }
}

}  // namespace

Permutation::Permutation(int degree) : degree_(degree) {
  check_degree(degree);
  for (int i = 0; i < degree; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> hit{};
  for (int i = 0; i < p.degree_; ++i) {
    int x = images[i];
    if (x < 1 || x > p.degree_ || hit[x - 1]) {
      throw UsageError("image list is not a bijection of {1.." +
                       std::to_string(p.degree_) + "}");
    }
    hit[x - 1] = true;
    p.image_[i] = static_cast<std::uint8_t>(x - 1);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  if (text.empty()) throw ParseError("empty permutation", 0);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (c < '1' || c > '9') {
        // Two-digit points are written in brackets: (1[10][11]).
        if (c == '[') {
          std::size_t close = text.find(']', i);
          if (close == std::string_view::npos) {
            throw ParseError("unterminated '['", i);
          }
          int v = 0;
          for (std::size_t k = i + 1; k < close; ++k) {
            if (text[k] < '0' || text[k] > '9') {
              throw ParseError("non-digit in bracketed point", k);
            }
            v = v * 10 + (text[k] - '0');
          }
          cycle.push_back(v);
          i = close + 1;
          continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      cycle.push_back(c - '0');
      ++i;
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    if (cycle.empty()) throw ParseError("empty cycle", i);
    ++i;
    cycles.push_back(std::move(cycle));
  }

  int max_point = 0;
  for (const auto& c : cycles) {
    for (int x : c) max_point = std::max(max_point, x);
  }
  int n = degree == 0 ? max_point : degree;
  if (max_point > n) {
    throw UsageError("point " + std::to_string(max_point) +
                     " exceeds degree " + std::to_string(n));
  }
  check_degree(n);

  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || used[c[k]]) {
        throw UsageError("point repeated in cycle notation");
      }
      used[c[k]] = true;
      images[c[k] - 1] = c[(k + 1) % c.size()];
    }
  }
  return from_images(images);
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > degree_) {
    throw UsageError("point " + std::to_string(point) + " outside 1.." +
                     std::to_string(degree_));
  }
  return image_[point - 1] + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = image_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

int Permutation::order() const {
  int result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<int>(c.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += '(';
    for (int x : c) {
      if (x < 10) {
        s += static_cast<char>('0' + x);
      } else {
        s += '[' + std::to_string(x) + ']';
      }
    }
    s += ')';
  }
  return s.empty() ? "(1)" : s;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (int i = 0; i < a.degree_; ++i) {
    if (auto c = a.image_[i] <=> b.image_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw UsageError("compose: degree mismatch");
  }
  std::vector<int> img(a.degree());
  for (int x = 1; x <= a.degree(); ++x) img[x - 1] = a(b(x));
  return Permutation::from_images(img);
}

Permutation conjugate(const Permutation& a, const Permutation& s) {
  if (a.degree() != s.degree()) {
    throw UsageError("conjugate: degree mismatch");
  }
  return compose(compose(s, a), s.inverse());
}

std::vector<int> orbit(std::span<const Permutation> gens, int point) {
  std::vector<int> out{point};
  std::vector<bool> seen(kMaxDegree + 1, false);
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      int y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool is_transitive(std::span<const Permutation> gens, int n) {
  for (const auto& g : gens) {
    if (g.degree() != n) throw UsageError("is_transitive: degree mismatch");
  }
  if (gens.empty()) return n == 1;
  return static_cast<int>(orbit(gens, 1).size()) == n;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace lowindex
