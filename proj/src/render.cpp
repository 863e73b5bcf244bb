#include "lowindex/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "lowindex/stabilizer.hpp"

namespace lowindex {

namespace {

constexpr double kSize = 800;
constexpr double kMargin = 10;
constexpr int kMaxDepth = 12;

using Complex = std::complex<double>;

bool is_extended(const Homomorphism& hom) {
  return hom.presentation->name == "extended_hecke";
}

const Alphabet& reflection_alphabet(const Homomorphism& hom) {
  if (is_extended(hom)) return hom.presentation->alphabet;
  if (!hom.presentation->reflection_alphabet) {
    throw UsageError("render: no P, Q, R expansion for " + hom.presentation->name);
  }
  return *hom.presentation->reflection_alphabet;
}

// Image of a vertex of Δ in the disk, computed projectively so that a vertex
// sent to ∞ lands on 1.
Complex disk_image(const Isometry& m, Complex z) {
  if (m.reversing) z = std::conj(z);
  const Complex num = m.a * z + m.b;
  const Complex den = m.c * z + m.d;
  const Complex i(0, 1);
  return (num - i * den) / (num + i * den);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Screen {
  double x, y;
};

Screen to_screen(Complex w) {
  const double r = kSize / 2 - kMargin;
  return {kSize / 2 + r * w.real(), kSize / 2 - r * w.imag()};
}

// Path segment from a to b along the geodesic through them.
std::string geodesic_to(Complex a, Complex b) {
  const Screen sb = to_screen(b);
  const double cross = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(cross) < 1e-9) {
    return "L " + fmt(sb.x) + " " + fmt(sb.y);
  }
  // Circle orthogonal to the unit circle: Re(c·conj(z)) = (1 + |z|²)/2 for
  // z = a, b.
  const double ra = (1 + std::norm(a)) / 2;
  const double rb = (1 + std::norm(b)) / 2;
  const double det = a.real() * b.imag() - a.imag() * b.real();
  const Complex c((ra * b.imag() - rb * a.imag()) / det,
                  (a.real() * rb - b.real() * ra) / det);
  const double radius = std::abs(a - c) * (kSize / 2 - kMargin);
  const Screen sa = to_screen(a);
  const Screen sc = to_screen(c);
  const double turn = (sa.x - sc.x) * (sb.y - sc.y) - (sa.y - sc.y) * (sb.x - sc.x);
  return "A " + fmt(radius) + " " + fmt(radius) + " 0 0 " + (turn > 0 ? "1" : "0") + " " +
         fmt(sb.x) + " " + fmt(sb.y);
}

std::vector<Complex> triangle_vertices(int p) {
  const double t = std::numbers::pi / p;
  return {Complex(0, 0), Complex(0, 1), Complex(-std::cos(t), std::sin(t))};
}

std::string tile_path(const Isometry& m, int p) {
  std::vector<Complex> v;
  for (Complex z : triangle_vertices(p)) v.push_back(disk_image(m, z));
  const Screen s0 = to_screen(v[0]);
  return "M " + fmt(s0.x) + " " + fmt(s0.y) + " " + geodesic_to(v[0], v[1]) + " " +
         geodesic_to(v[1], v[2]) + " " + geodesic_to(v[2], v[0]) + " Z";
}

int find_tile(const std::vector<Tile>& tiles, const Isometry& m) {
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].map.same_map(m, kTileTolerance)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::vector<std::string> default_palette() {
  return {"#ffffff", "#ff0000", "#0000ff", "#00a000"};
}

int tile_color(const Word& w, const Homomorphism& hom) {
  if (is_extended(hom)) return eval(w, hom)(1);
  Word even = w;
  if (even.size() % 2 == 1) even.letters.push_back({1, 1});  // w·Q covers w·Δ
  auto k = hecke_word_from_reflections(even, *hom.presentation);
  if (!k) throw UsageError("tile_color: word is not even");
  return eval(*k, hom)(1);
}

std::vector<Tile> scene_tiles(const RenderScene& scene) {
  if (scene.depth < 0 || scene.depth > kMaxDepth) {
    throw UsageError("render depth must be between 0 and " + std::to_string(kMaxDepth));
  }
  if (static_cast<int>(scene.palette.size()) < scene.hom.degree()) {
    throw UsageError("palette has fewer colors than the assignment degree");
  }
  const TriangleGenerators gens = triangle_generators(scene.p);
  const Isometry side[3] = {gens.P, gens.Q, gens.R};
  (void)reflection_alphabet(scene.hom);

  std::vector<Tile> tiles{{Word{}, Isometry::identity(), tile_color(Word{}, scene.hom), false}};
  std::vector<Word> frontier{Word{}};
  std::vector<Isometry> frontier_maps{Isometry::identity()};
  for (int len = 1; len <= scene.depth; ++len) {
    std::vector<Word> next;
    std::vector<Isometry> next_maps;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (int g = 0; g < 3; ++g) {
        const Word& w = frontier[i];
        if (!w.empty() && w.letters.back().gen == g) continue;
        Word u = w;
        u.letters.push_back({g, 1});
        Isometry m = compose(frontier_maps[i], side[g]);
        if (find_tile(tiles, m) < 0) {
          tiles.push_back({u, m, tile_color(u, scene.hom), false});
        }
        next.push_back(std::move(u));
        next_maps.push_back(m);
      }
    }
    frontier = std::move(next);
    frontier_maps = std::move(next_maps);
  }

  if (scene.highlight) {
    const Presentation& pres = *scene.hom.presentation;
    for (const Word& t : fundamental_region(scene.hom)) {
      std::vector<Word> parts;
      if (is_extended(scene.hom)) {
        parts.push_back(t);
      } else {
        Word e = pres.expand(t);
        parts.push_back(e);
        e.letters.push_back({1, 1});
        parts.push_back(free_reduce(e, *pres.reflection_alphabet));
      }
      for (const Word& w : parts) {
        int idx = find_tile(tiles, eval_word(w, scene.p));
        if (idx >= 0) tiles[idx].in_region = true;
      }
    }
  }
  return tiles;
}

std::string render_coloring(const RenderScene& scene) {
  const auto tiles = scene_tiles(scene);
  const std::string size = fmt(kSize);
  const std::string half = fmt(kSize / 2);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
     << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\""
     << fmt(kSize / 2 - kMargin) << "\" fill=\"#eeeeee\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
     << "<g stroke=\"#555555\" stroke-width=\"0.5\" stroke-linejoin=\"round\">\n";
  for (const auto& t : tiles) {
    os << "<path d=\"" << tile_path(t.map, scene.p) << "\" fill=\""
       << scene.palette[t.color - 1] << "\"/>\n";
  }
  os << "</g>\n";
  if (scene.highlight) {
    os << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n";
    for (const auto& t : tiles) {
      if (t.in_region) os << "<path d=\"" << tile_path(t.map, scene.p) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

bool mirror_adjacency_holds(const RenderScene& scene, int depth) {
  if (!is_extended(scene.hom)) {
    throw UsageError("mirror adjacency is defined for extended_hecke assignments");
  }
  RenderScene wide = scene;
  wide.depth = std::max(scene.depth, depth + 1);
  const auto tiles = scene_tiles(wide);
  const Alphabet& alphabet = scene.hom.presentation->alphabet;
  const TriangleGenerators gens = triangle_generators(scene.p);
  const Isometry side[3] = {gens.P, gens.Q, gens.R};
  for (const auto& t : tiles) {
    if (static_cast<int>(t.word.size()) > depth) continue;
    for (int g = 0; g < 3; ++g) {
      const int idx = find_tile(tiles, compose(t.map, side[g]));
      if (idx < 0) return false;
      Word mirror = concat(t.word, Word{{{g, 1}}});
      mirror = concat(mirror, inverse(t.word, alphabet));
      if (tiles[idx].color != eval(mirror, scene.hom)(t.color)) return false;
    }
  }
  return true;
}

}  // namespace lowindex
