#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "dirtile/coxeter.hpp"
#include "dirtile/mgon.hpp"

namespace dirtile {

struct PatchVertex {
  std::vector<int> edges;  // cyclic order; boundary vertices list one arc
  bool interior = false;

  friend bool operator==(const PatchVertex&, const PatchVertex&) = default;
};

struct PatchEdge {
  int src = -1;
  int tgt = -1;
  std::array<int, 2> tiles{-1, -1};
  bool interior = false;

  friend bool operator==(const PatchEdge&, const PatchEdge&) = default;
};

struct PatchTile {
  std::vector<int> edges;  // edges[i] is d_{i+1}
  int color = 1;
  std::vector<int> word;  // 1-based labels from the base tile

  friend bool operator==(const PatchTile&, const PatchTile&) = default;
};

// Ids are vector positions.
struct TilingPatch {
  CoxeterParams params;
  MGonCategory category;
  int radius = 0;
  int base_tile = 0;
  bool reflective = false;
  std::vector<PatchVertex> vertices;
  std::vector<PatchEdge> edges;
  std::vector<PatchTile> tiles;

  int sides() const { return params.m; }
  // 1-based label of edge e in tile x, or 0.
  int label_of(int x, int e) const;
  int other_tile(int e, int x) const;
  // Tile across d_label(x), or -1.
  int neighbor(int x, int label) const;
  // v_i(x): the vertex shared by d_{i-1}(x) and d_i(x), or -1.
  int vertex_of(int x, int i) const;
  // Label of each incident edge, in the vertex's cyclic order.
  std::vector<int> edge_labels_at_vertex(int v) const;

  friend bool operator==(const TilingPatch&, const TilingPatch&) = default;
};

TilingPatch build_reflective(const CoxeterParams& params, const MGonCategory& category, int radius);

struct Violation {
  std::string kind;
  std::vector<int> ids;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
  const Violation* find(const std::string& kind) const;
};

ValidationReport validate(const TilingPatch& patch);

// Labels of a shortest track from x to y.
std::vector<int> track_between(const TilingPatch& patch, int x, int y);
// Tile reached from x along a route, or -1 if the route leaves the patch.
int follow_route(const TilingPatch& patch, int x, const std::vector<int>& route);

// A shortest track from x to y, ties broken at random.
std::vector<int> random_track(const TilingPatch& patch, int x, int y, std::mt19937_64& rng);

std::vector<int> geodesic_through(const TilingPatch& patch, int e);
std::vector<int> coxeter_word(const TilingPatch& patch, int x);

// Tiles at distance <= radius - 1 from the base; every one of them is fully surrounded.
std::vector<int> inner_tiles(const TilingPatch& patch);

}  // namespace dirtile
