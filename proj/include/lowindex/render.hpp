#pragma once

#include <string>
#include <vector>

#include "lowindex/homomorphism.hpp"
#include "lowindex/hyperbolic.hpp"

namespace lowindex {

inline constexpr double kTileTolerance = 1e-7;

/// White, red, blue, green.
std::vector<std::string> default_palette();

struct RenderScene {
  /// Over extended_hecke, or over hecke/modular (tiles are then colored by
  /// the even word covering Δ' = Δ ∪ Q(Δ)).
  Homomorphism hom;
  int p = 3;
  int depth = 7;
  std::vector<std::string> palette = default_palette();
  bool highlight = false;
};

struct Tile {
  Word word;  // over P, Q, R
  Isometry map;
  int color = 1;
  bool in_region = false;
};

/// One tile per distinct isometry among reduced words of length ≤ depth,
/// breadth-first in P, Q, R order.
std::vector<Tile> scene_tiles(const RenderScene& scene);

/// Color of the tile w·Δ: eval(w)(1).
int tile_color(const Word& reflection_word, const Homomorphism& hom);

/// SVG document of the colored tiling in the Poincaré disk.
std::string render_coloring(const RenderScene& scene);

/// For every tile w·Δ with |w| ≤ depth and every side g, the neighbor
/// w·g·Δ found among the tiles has color π(w g w⁻¹)(color of w·Δ).
/// Extended Hecke assignments only.
bool mirror_adjacency_holds(const RenderScene& scene, int depth);

}  // namespace lowindex
