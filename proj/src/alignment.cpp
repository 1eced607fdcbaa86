#include "dirtile/alignment.hpp"

#include <deque>

#include "dirtile/errors.hpp"
#include "dirtile/lambda.hpp"

namespace dirtile {

EdgeReversal EdgeReversal::constant(const TilingPatch& patch, int value) {
  if (value != 1 && value != -1) throw DomainError("edge reversal values must be +1 or -1");
  return {std::vector<int>(patch.edges.size(), value)};
}

EdgeReversal EdgeReversal::from_tiles(const TilingPatch& patch, const std::vector<SignCode>& tuples) {
  if (tuples.size() != patch.tiles.size()) throw DimensionError("one tuple per tile required");
  EdgeReversal tau{std::vector<int>(patch.edges.size(), 0)};
  for (std::size_t x = 0; x < patch.tiles.size(); ++x) {
    const auto& es = patch.tiles[x].edges;
    if (tuples[x].size() != static_cast<int>(es.size())) throw DimensionError("tuple length differs from m");
    for (std::size_t i = 0; i < es.size(); ++i) {
      int v = tuples[x][static_cast<int>(i)];
      int& slot = tau.values[es[i]];
      if (slot != 0 && slot != v)
        throw SchemeError("tiles disagree on edge " + std::to_string(es[i]) + " (tile " + std::to_string(x) + ")");
      slot = v;
    }
  }
  for (int& v : tau.values)
    if (v == 0) v = 1;
  return tau;
}

SignCode EdgeReversal::tile_tuple(const TilingPatch& patch, int x) const {
  if (values.size() != patch.edges.size()) throw DimensionError("edge reversal does not cover the patch");
  const auto& es = patch.tiles.at(x).edges;
  std::vector<int> v;
  for (int e : es) v.push_back(values[e]);
  return SignCode::from_entries(v);
}

void validate_scheme(const ReflectionScheme& s) {
  int m = s.base.sides();
  if (s.target.sides() != m) throw SchemeError("base and target differ in m");
  if (s.n % 4 != 0) throw SchemeError("n = " + std::to_string(s.n) + " is not divisible by 4");
  if (s.gamma.delta != s.target.code()) throw SchemeError("gamma is not attached to the target code");
  if (s.gamma.elements == 0) throw SchemeError("gamma is empty");
  if (!is_reversal_closed(s.gamma.delta, s.gamma.elements)) throw SchemeError("gamma " + s.gamma.str() + " is not reversal-closed");
  if (static_cast<int>(s.phi.size()) != m) throw SchemeError("expected " + std::to_string(m) + " phi values");
  auto lambda = build_restricted(s.base, s.target, s.gamma.elements);
  for (int i = 0; i < m; ++i) {
    if (s.phi[i].size() != m) throw SchemeError("phi_" + std::to_string(i + 1) + " has the wrong length");
    if (s.phi[i][i] != 1) throw SchemeError("phi_" + std::to_string(i + 1) + " has -1 in its own position");
    if (!contains(lambda, s.phi[i])) throw SchemeError("phi_" + std::to_string(i + 1) + " = " + s.phi[i].str() + " lies outside Lambda^Gamma");
  }
}

Realignment apply_reversal(const TilingPatch& patch, const EdgeReversal& tau, const MGonCategory& target) {
  int m = patch.sides();
  if (target.sides() != m) throw DimensionError("target has a different m");
  if (tau.values.size() != patch.edges.size()) throw DimensionError("edge reversal does not cover the patch");
  const SignCode& base = patch.category.code();
  auto allowed = build_restricted(patch.category, target);
  auto elements = all_elements(m);

  Realignment out{patch, {}};
  out.patch.category = target;
  for (std::size_t e = 0; e < patch.edges.size(); ++e)
    if (tau.values[e] < 0) std::swap(out.patch.edges[e].src, out.patch.edges[e].tgt);

  for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x) {
    SignCode t = tau.tile_tuple(patch, x);
    if (!contains(allowed, t))
      throw NotRealizableError(x, "tile " + std::to_string(x) + ": tau = " + t.str() + " is not realizable over " + target.code().str());
    // Relabelling d'_i = d_{s(i)} needs the code action that follows the index action.
    SignCode want = t * base;
    const DihedralElement* chosen = nullptr;
    for (const auto& s : elements)
      if (transport_code(s, target.code()) == want) {
        chosen = &s;
        break;
      }
    if (!chosen) throw NotRealizableError(x, "tile " + std::to_string(x) + ": no relabelling found");
    out.sigma.push_back(*chosen);
    const auto& old_edges = patch.tiles[x].edges;
    auto& new_edges = out.patch.tiles[x].edges;
    for (int i = 1; i <= m; ++i) new_edges[i - 1] = old_edges[act_on_index(*chosen, i) - 1];
  }

  bool reflective = true;
  for (std::size_t e = 0; e < out.patch.edges.size() && reflective; ++e) {
    const auto& pe = out.patch.edges[e];
    if (pe.tiles[0] >= 0 && pe.tiles[1] >= 0)
      reflective = out.patch.label_of(pe.tiles[0], static_cast<int>(e)) == out.patch.label_of(pe.tiles[1], static_cast<int>(e));
  }
  out.patch.reflective = reflective;
  if (reflective)
    for (int x = 0; x < static_cast<int>(out.patch.tiles.size()); ++x)
      out.patch.tiles[x].word = track_between(out.patch, out.patch.base_tile, x);
  return out;
}

SignCode phi_of_word(const std::vector<SignCode>& phi, const std::vector<int>& route) {
  if (phi.empty()) throw SchemeError("empty phi");
  SignCode acc = SignCode::all_ones(phi.front().size());
  for (int l : route) {
    if (l < 1 || l > static_cast<int>(phi.size())) throw DomainError("route label out of range");
    acc = acc * phi[l - 1];
  }
  return acc;
}

EdgeReversal generate_from_scheme(const TilingPatch& patch, const ReflectionScheme& scheme, const DihedralElement& sigma0) {
  validate_scheme(scheme);
  if (!patch.reflective) throw SchemeError("patch is not reflective");
  if (patch.category != scheme.base) throw SchemeError("patch category differs from the scheme's base");
  if (patch.params.n != scheme.n) throw SchemeError("patch n differs from the scheme's n");
  if (sigma0.m() != patch.sides() || !scheme.gamma.contains(sigma0)) throw SchemeError(sigma0.name() + " is not in gamma");
  SignCode start = scheme.base.code() * act_on_code(sigma0, scheme.target.code());
  std::vector<SignCode> tuples;
  for (const auto& t : patch.tiles) tuples.push_back(start * phi_of_word(scheme.phi, t.word));
  return EdgeReversal::from_tiles(patch, tuples);
}

bool check_phi_generated(const TilingPatch& patch, const EdgeReversal& tau, const ReflectionScheme& scheme) {
  int m = patch.sides();
  if (static_cast<int>(scheme.phi.size()) != m) return false;
  for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x) {
    SignCode tx = tau.tile_tuple(patch, x);
    for (int i = 1; i <= m; ++i) {
      int y = patch.neighbor(x, i);
      if (y < 0) continue;
      if (tau.tile_tuple(patch, y) != scheme.phi[i - 1] * tx) return false;
    }
  }
  return true;
}

SchemeInference infer_scheme(const TilingPatch& patch, const EdgeReversal& tau, std::optional<MGonCategory> target) {
  SchemeInference out;
  int m = patch.sides();
  if (!patch.reflective) {
    out.message = "patch is not reflective";
    return out;
  }
  std::vector<std::optional<SignCode>> phi(m);
  std::vector<int> witness(m, -1);
  for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x) {
    SignCode tx = tau.tile_tuple(patch, x);
    for (int i = 1; i <= m; ++i) {
      int y = patch.neighbor(x, i);
      if (y < 0) continue;
      SignCode c = tau.tile_tuple(patch, y) * tx;
      if (!phi[i - 1]) {
        phi[i - 1] = c;
        witness[i - 1] = x;
      } else if (*phi[i - 1] != c) {
        out.tile_a = witness[i - 1];
        out.tile_b = x;
        out.label = i;
        out.message = "tiles " + std::to_string(out.tile_a) + " and " + std::to_string(x) + " see different changes across label " +
                      std::to_string(i);
        return out;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!phi[i]) {
      out.label = i + 1;
      out.message = "label " + std::to_string(i + 1) + " is never crossed inside the patch";
      return out;
    }
    out.phi.push_back(*phi[i]);
  }
  if (patch.params.n % 4 != 0) {
    out.message = "n = " + std::to_string(patch.params.n) + " is not divisible by 4";
    return out;
  }
  MGonCategory tgt = target ? *target : MGonCategory(patch.category.code() * tau.tile_tuple(patch, patch.base_tile));
  if (tgt.sides() != m) throw DimensionError("target has a different m");
  for (const auto& gamma : enumerate_maximal(tgt.code(), kMaxSides)) {
    ReflectionScheme s{patch.category, tgt, patch.params.n, gamma, out.phi};
    try {
      validate_scheme(s);
    } catch (const SchemeError&) {
      continue;
    }
    out.scheme = s;
    return out;
  }
  out.message = "no maximal reversal-closed subset for " + tgt.code().str() + " contains every phi value";
  return out;
}

TileMap reflect_automorphism(const TilingPatch& patch, const std::vector<int>& geodesic) {
  if (!patch.reflective) throw DomainError("reflections need a reflective patch");
  const int F = static_cast<int>(patch.tiles.size());
  TileMap g(F, -1);
  std::deque<int> queue;
  auto pair = [&](int a, int b) {
    if (g[a] == b && g[b] == a) return;
    if (g[a] >= 0 || g[b] >= 0 || a == b) throw Error("internal: geodesic pairing is not an involution");
    g[a] = b;
    g[b] = a;
    queue.push_back(a);
    queue.push_back(b);
  };
  for (int e : geodesic) {
    if (e < 0 || e >= static_cast<int>(patch.edges.size())) throw DomainError("edge id out of range");
    const auto& pe = patch.edges[e];
    if (pe.tiles[0] >= 0 && pe.tiles[1] >= 0) pair(pe.tiles[0], pe.tiles[1]);
  }
  if (queue.empty()) throw DomainError("geodesic has no interior edge");
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int j = 1; j <= patch.sides(); ++j) {
      int a2 = patch.neighbor(a, j), b2 = patch.neighbor(g[a], j);
      if (a2 >= 0 && b2 >= 0) pair(a2, b2);
    }
  }
  return g;
}

int domain_size(const TileMap& map) {
  int c = 0;
  for (int y : map) c += y >= 0;
  return c;
}

bool check_psi_reflective(const TilingPatch& patch, const EdgeReversal& tau, const TileMap& gamma, const SignCode& psi) {
  if (gamma.size() != patch.tiles.size()) throw DimensionError("automorphism does not cover the patch");
  if (domain_size(gamma) == 0) throw DomainError("automorphism has an empty domain");
  for (int x = 0; x < static_cast<int>(gamma.size()); ++x)
    if (gamma[x] >= 0 && tau.tile_tuple(patch, gamma[x]) != psi * tau.tile_tuple(patch, x)) return false;
  return true;
}

SignCode infer_psi(const TilingPatch& patch, const EdgeReversal& tau, const TileMap& gamma) {
  for (int x = 0; x < static_cast<int>(gamma.size()); ++x)
    if (gamma[x] >= 0) return tau.tile_tuple(patch, gamma[x]) * tau.tile_tuple(patch, x);
  throw DomainError("automorphism has an empty domain");
}

CompositeSymmetry composite_symmetry(const TilingPatch& patch, const EdgeReversal& tau,
                                     const std::vector<std::vector<int>>& geodesics) {
  const int F = static_cast<int>(patch.tiles.size());
  CompositeSymmetry out{SignCode::all_ones(patch.sides()), TileMap(F), false};
  for (int x = 0; x < F; ++x) out.map[x] = x;
  for (const auto& geo : geodesics) {
    TileMap g = reflect_automorphism(patch, geo);
    out.psi = out.psi * infer_psi(patch, tau, g);
    for (int& y : out.map)
      if (y >= 0) y = g[y];
  }
  if (domain_size(out.map) == 0) throw DomainError("composite has an empty common domain");
  out.verified = check_psi_reflective(patch, tau, out.map, out.psi);
  return out;
}

bool phi_respects_relations(const CoxeterParams& params, const std::vector<SignCode>& phi) {
  if (static_cast<int>(phi.size()) != params.m) return false;
  for (int i = 0; i < params.m; ++i)
    for (int j = 0; j < params.m; ++j) {
      int k = params.order(i, j);
      if (k == 0) continue;
      SignCode p = phi[i] * phi[j], power = SignCode::all_ones(params.m);
      for (int t = 0; t < k; ++t) power = power * p;
      if (!power.is_all_ones()) return false;
    }
  return true;
}

bool phi_consistent_on_patch(const TilingPatch& patch, const std::vector<SignCode>& phi) {
  if (static_cast<int>(phi.size()) != patch.sides()) return false;
  std::vector<SignCode> rho;
  for (const auto& t : patch.tiles) rho.push_back(phi_of_word(phi, t.word));
  for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x)
    for (int i = 1; i <= patch.sides(); ++i) {
      int y = patch.neighbor(x, i);
      if (y >= 0 && rho[y] != phi[i - 1] * rho[x]) return false;
    }
  return true;
}

}  // namespace dirtile
