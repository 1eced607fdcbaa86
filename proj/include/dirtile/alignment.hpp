#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirtile/dihedral.hpp"
#include "dirtile/mgon.hpp"
#include "dirtile/patch.hpp"
#include "dirtile/reversal_closed.hpp"

namespace dirtile {

// tau: edge id -> +1/-1.
struct EdgeReversal {
  std::vector<int> values;

  static EdgeReversal constant(const TilingPatch& patch, int value = 1);
  // Builds edge values from per-tile tuples; throws SchemeError if two tiles disagree on an edge.
  static EdgeReversal from_tiles(const TilingPatch& patch, const std::vector<SignCode>& tuples);

  SignCode tile_tuple(const TilingPatch& patch, int x) const;

  friend bool operator==(const EdgeReversal&, const EdgeReversal&) = default;
};

struct ReflectionScheme {
  MGonCategory base;
  MGonCategory target;
  int n = 4;
  ReversalClosedSubset gamma;
  std::vector<SignCode> phi;  // phi[i] = phi(s_{i+1})

  friend bool operator==(const ReflectionScheme&, const ReflectionScheme&) = default;
};

// Throws SchemeError naming the first broken invariant.
void validate_scheme(const ReflectionScheme& scheme);

struct Realignment {
  TilingPatch patch;
  std::vector<DihedralElement> sigma;  // per tile
};

Realignment apply_reversal(const TilingPatch& patch, const EdgeReversal& tau, const MGonCategory& target);

// Product of phi over a route of 1-based labels.
SignCode phi_of_word(const std::vector<SignCode>& phi, const std::vector<int>& route);

EdgeReversal generate_from_scheme(const TilingPatch& patch, const ReflectionScheme& scheme, const DihedralElement& sigma0);
bool check_phi_generated(const TilingPatch& patch, const EdgeReversal& tau, const ReflectionScheme& scheme);

struct SchemeInference {
  std::optional<ReflectionScheme> scheme;
  std::vector<SignCode> phi;  // filled when the local values are consistent
  // First disagreement: adjacencies (tile_a, across label) and (tile_b, across label).
  int tile_a = -1;
  int tile_b = -1;
  int label = 0;
  std::string message;

  bool ok() const { return scheme.has_value(); }
};

// Target defaults to base * tau(base tile), which makes sigma0 = e.
SchemeInference infer_scheme(const TilingPatch& patch, const EdgeReversal& tau,
                             std::optional<MGonCategory> target = std::nullopt);

// Partial tile map, -1 outside the domain.
using TileMap = std::vector<int>;

TileMap reflect_automorphism(const TilingPatch& patch, const std::vector<int>& geodesic);
int domain_size(const TileMap& map);
bool check_psi_reflective(const TilingPatch& patch, const EdgeReversal& tau, const TileMap& gamma, const SignCode& psi);
// tau(gamma(x)) * tau(x) for the first x in the domain.
SignCode infer_psi(const TilingPatch& patch, const EdgeReversal& tau, const TileMap& gamma);

struct CompositeSymmetry {
  SignCode psi;
  TileMap map;
  bool verified = false;
};

// Reflections are applied in the order given.
CompositeSymmetry composite_symmetry(const TilingPatch& patch, const EdgeReversal& tau,
                                     const std::vector<std::vector<int>>& geodesics);

// (phi_i phi_j)^{M_ij} = 1 for every finite M_ij.
bool phi_respects_relations(const CoxeterParams& params, const std::vector<SignCode>& phi);
// phi(word(y)) = phi_i phi(word(x)) across every adjacency of the patch.
bool phi_consistent_on_patch(const TilingPatch& patch, const std::vector<SignCode>& phi);

}  // namespace dirtile
