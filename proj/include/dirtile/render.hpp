#pragma once

#include <optional>
#include <string>

#include "dirtile/alignment.hpp"
#include "dirtile/patch.hpp"

namespace dirtile {

enum class Geometry { automatic, euclidean, poincare_disk };

struct RenderStyle {
  Geometry geometry = Geometry::automatic;
  bool show_edge_labels = false;
  bool show_tile_ids = false;
  int size = 800;
  std::string highlight = "#d62728";  // edges with tau = -1
};

// Vertex positions: Euclidean plane or Poincare disk.
std::vector<std::pair<double, double>> layout_vertices(const TilingPatch& patch, Geometry geometry);

std::string render_svg(const TilingPatch& patch, const EdgeReversal* tau = nullptr, const RenderStyle& style = {});

}  // namespace dirtile
