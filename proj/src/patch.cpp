#include "dirtile/patch.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dirtile/errors.hpp"

namespace dirtile {

int TilingPatch::label_of(int x, int e) const {
  const auto& es = tiles.at(x).edges;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] == e) return static_cast<int>(i) + 1;
  return 0;
}

int TilingPatch::other_tile(int e, int x) const {
  const auto& t = edges.at(e).tiles;
  if (t[0] == x) return t[1];
  if (t[1] == x) return t[0];
  return -1;
}

int TilingPatch::neighbor(int x, int label) const {
  const auto& es = tiles.at(x).edges;
  if (label < 1 || label > static_cast<int>(es.size())) throw DomainError("label out of range");
  return other_tile(es[label - 1], x);
}

int TilingPatch::vertex_of(int x, int i) const {
  const auto& es = tiles.at(x).edges;
  int m = static_cast<int>(es.size());
  if (i < 1 || i > m) throw DomainError("vertex index out of range");
  const PatchEdge& a = edges.at(es[(i + m - 2) % m]);
  const PatchEdge& b = edges.at(es[i - 1]);
  int found = -1, count = 0;
  for (int u : {a.src, a.tgt})
    if (u == b.src || u == b.tgt) {
      if (u != found) ++count;
      found = u;
    }
  return count == 1 ? found : -1;
}

std::vector<int> TilingPatch::edge_labels_at_vertex(int v) const {
  std::vector<int> out;
  for (int e : vertices.at(v).edges) {
    int t = edges.at(e).tiles[0];
    out.push_back(t < 0 ? 0 : label_of(t, e));
  }
  return out;
}

namespace {

using Word = CoxeterGroup::Word;

struct Builder {
  const CoxeterGroup& group;
  int m, n;
  std::unordered_map<Word, int> tile_id;
  std::vector<Word> tile_word;
  std::unordered_map<std::string, int> edge_id;
  std::unordered_map<std::string, int> vertex_id;
  std::vector<std::pair<Word, int>> vertex_key;  // minimal coset rep, vertex index

  std::string edge_key(const Word& x, int s) const {
    Word y = group.multiply(x, s);
    const Word& lo = x.size() < y.size() ? x : y;
    return lo + '#' + static_cast<char>(s);
  }
};

}  // namespace

TilingPatch build_reflective(const CoxeterParams& params_in, const MGonCategory& category, int radius) {
  CoxeterParams params = CoxeterParams::make(params_in.m, params_in.n);
  if (!params_in.matrix.empty() && params_in.matrix != params.matrix) throw InvalidParamsError("Coxeter matrix does not match {m,n}");
  const int m = params.m, n = params.n;
  if (category.sides() != m) throw DimensionError("category has " + std::to_string(category.sides()) + " sides, tiling has " + std::to_string(m));
  if (radius < 0) throw DomainError("radius must be non-negative");

  CoxeterGroup group(params);

  // Ball of the given radius, grown corona by corona.
  std::unordered_map<Word, int> dist{{Word{}, 0}};
  std::vector<Word> layer{Word{}};
  std::vector<Word> inner;
  for (int d = 0; d < radius; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      inner.push_back(w);
      for (int s = 0; s < m; ++s) {
        Word u = group.multiply(w, s);
        if (dist.emplace(u, d + 1).second) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::unordered_set<Word> members;
  for (const auto& [w, d] : dist) members.insert(w);
  // Collar: complete every vertex star of the inner tiles.
  for (const auto& w : inner)
    for (int i = 0; i < m; ++i) {
      int a = (i + m - 1) % m, b = i;
      Word t = w;
      for (int k = 1; k < n; ++k) {
        t = group.multiply(t, k % 2 ? b : a);
        members.insert(t);
      }
    }

  Builder bld{group, m, n, {}, {}, {}, {}, {}};
  TilingPatch patch;
  patch.params = params;
  patch.category = category;
  patch.radius = radius;
  patch.base_tile = 0;
  patch.reflective = true;

  bld.tile_id.emplace(Word{}, 0);
  bld.tile_word.push_back(Word{});
  patch.tiles.push_back({});
  for (std::size_t q = 0; q < bld.tile_word.size(); ++q) {
    Word x = bld.tile_word[q];
    for (int s = 0; s < m; ++s) {
      Word y = group.multiply(x, s);
      if (!members.count(y) || bld.tile_id.count(y)) continue;
      bld.tile_id.emplace(y, static_cast<int>(bld.tile_word.size()));
      bld.tile_word.push_back(y);
      PatchTile t;
      t.word = patch.tiles[q].word;
      t.word.push_back(s + 1);
      patch.tiles.push_back(std::move(t));
    }
  }

  const SignCode& code = category.code();
  for (std::size_t x = 0; x < bld.tile_word.size(); ++x) {
    const Word& w = bld.tile_word[x];
    PatchTile& tile = patch.tiles[x];
    tile.color = w.size() % 2 ? -1 : 1;
    std::vector<int> vs(m);
    for (int i = 0; i < m; ++i) {
      Word rep = group.min_coset_rep(w, (i + m - 1) % m, i);
      std::string key = rep + '@' + static_cast<char>(i);
      auto [it, fresh] = bld.vertex_id.emplace(key, static_cast<int>(patch.vertices.size()));
      if (fresh) {
        patch.vertices.push_back({});
        bld.vertex_key.emplace_back(rep, i);
      }
      vs[i] = it->second;
    }
    for (int i = 0; i < m; ++i) {
      auto [it, fresh] = bld.edge_id.emplace(bld.edge_key(w, i), static_cast<int>(patch.edges.size()));
      if (fresh) {
        PatchEdge e;
        int from = vs[i], to = vs[(i + 1) % m];
        if (code[i] < 0) std::swap(from, to);
        e.src = from;
        e.tgt = to;
        patch.edges.push_back(e);
      }
      PatchEdge& e = patch.edges[it->second];
      e.tiles[e.tiles[0] < 0 ? 0 : 1] = static_cast<int>(x);
      tile.edges.push_back(it->second);
    }
  }
  for (auto& e : patch.edges) e.interior = e.tiles[1] >= 0;

  // Cyclic order at each vertex: E_k and E_{k+1} bound the tile T_k.
  for (std::size_t v = 0; v < patch.vertices.size(); ++v) {
    const auto& [rep, i] = bld.vertex_key[v];
    int a = (i + m - 1) % m, b = i;
    std::vector<int> E(n), T(n);
    Word t = rep;
    for (int k = 0; k < n; ++k) {
      auto ti = bld.tile_id.find(t);
      T[k] = ti == bld.tile_id.end() ? -1 : ti->second;
      auto ei = bld.edge_id.find(bld.edge_key(t, k % 2 ? b : a));
      E[k] = ei == bld.edge_id.end() ? -1 : ei->second;
      t = group.multiply(t, k % 2 ? a : b);
    }
    if (rep.size() % 2) {
      std::vector<int> E2(n), T2(n);
      for (int k = 0; k < n; ++k) {
        E2[k] = E[(n - k) % n];
        T2[k] = T[n - 1 - k];
      }
      E = std::move(E2);
      T = std::move(T2);
    }
    PatchVertex& pv = patch.vertices[v];
    pv.interior = std::all_of(T.begin(), T.end(), [](int x) { return x >= 0; });
    int start = 0;
    if (pv.interior) {
      start = static_cast<int>(std::min_element(E.begin(), E.end()) - E.begin());
    } else {
      for (int k = 0; k < n; ++k)
        if (E[k] >= 0 && T[(k + n - 1) % n] < 0) {
          start = k;
          break;
        }
    }
    for (int k = 0; k < n; ++k) {
      int e = E[(start + k) % n];
      if (e >= 0) pv.edges.push_back(e);
    }
  }
  return patch;
}

bool ValidationReport::has(const std::string& kind) const { return find(kind) != nullptr; }

const Violation* ValidationReport::find(const std::string& kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return &v;
  return nullptr;
}

ValidationReport validate(const TilingPatch& patch) {
  ValidationReport report;
  auto add = [&](std::string kind, std::vector<int> ids, std::string msg) {
    report.violations.push_back({std::move(kind), std::move(ids), std::move(msg)});
  };
  const int m = patch.params.m, n = patch.params.n;
  const int V = static_cast<int>(patch.vertices.size()), E = static_cast<int>(patch.edges.size()),
            F = static_cast<int>(patch.tiles.size());

  // Dangling references make the remaining checks meaningless.
  for (int x = 0; x < F; ++x)
    for (int e : patch.tiles[x].edges)
      if (e < 0 || e >= E) add("dangling-id", {x}, "tile " + std::to_string(x) + " names missing edge " + std::to_string(e));
  for (int e = 0; e < E; ++e) {
    const auto& pe = patch.edges[e];
    if (pe.src < 0 || pe.src >= V || pe.tgt < 0 || pe.tgt >= V) add("dangling-id", {e}, "edge " + std::to_string(e) + " has a missing endpoint");
    for (int t : pe.tiles)
      if (t < -1 || t >= F) add("dangling-id", {e}, "edge " + std::to_string(e) + " names missing tile " + std::to_string(t));
  }
  for (int v = 0; v < V; ++v)
    for (int e : patch.vertices[v].edges)
      if (e < 0 || e >= E) add("dangling-id", {v}, "vertex " + std::to_string(v) + " names missing edge " + std::to_string(e));
  if (F == 0) add("dangling-id", {}, "patch has no tiles");
  if (patch.category.sides() != m) add("dangling-id", {}, "category and params disagree on m");
  if (!report.ok()) return report;

  for (int x = 0; x < F; ++x) {
    const auto& t = patch.tiles[x];
    if (static_cast<int>(t.edges.size()) != m) {
      add("nonsingular", {x}, "tile " + std::to_string(x) + " has " + std::to_string(t.edges.size()) + " edges");
      continue;
    }
    std::set<int> es(t.edges.begin(), t.edges.end()), vs;
    bool well_formed = true;
    for (int i = 1; i <= m; ++i) {
      int v = patch.vertex_of(x, i);
      if (v < 0) well_formed = false;
      vs.insert(v);
    }
    if (static_cast<int>(es.size()) != m || !well_formed || static_cast<int>(vs.size()) != m)
      add("nonsingular", {x}, "tile " + std::to_string(x) + " does not have m distinct edges and vertices");
  }
  for (int e = 0; e < E; ++e)
    if (patch.edges[e].src == patch.edges[e].tgt) add("nonsingular", {e}, "edge " + std::to_string(e) + " is a loop");

  const SignCode& code = patch.category.code();
  for (int x = 0; x < F; ++x) {
    const auto& t = patch.tiles[x];
    if (static_cast<int>(t.edges.size()) != m) continue;
    for (int i = 1; i <= m; ++i) {
      int j = i % m + 1;
      int v = patch.vertex_of(x, j);
      const auto& di = patch.edges[t.edges[i - 1]];
      const auto& dj = patch.edges[t.edges[j - 1]];
      bool ok = v >= 0 && (code.at(i) > 0 ? di.tgt == v : di.src == v) && (code.at(j) > 0 ? dj.src == v : dj.tgt == v);
      if (!ok)
        add("presheaf-law", {x}, "tile " + std::to_string(x) + ": edges d" + std::to_string(i) + ", d" + std::to_string(j) +
                                     " do not meet as the category requires");
    }
  }

  std::map<std::pair<int, int>, int> shared;
  for (int e = 0; e < E; ++e) {
    const auto& pe = patch.edges[e];
    if (pe.tiles[0] < 0) add("edge-slots", {e}, "edge " + std::to_string(e) + " has no tile");
    if (pe.interior != (pe.tiles[0] >= 0 && pe.tiles[1] >= 0)) add("edge-slots", {e}, "edge " + std::to_string(e) + " interior flag wrong");
    for (int t : pe.tiles)
      if (t >= 0 && patch.label_of(t, e) == 0) add("edge-slots", {e, t}, "edge " + std::to_string(e) + " lists tile " + std::to_string(t) + " which does not contain it");
    if (pe.tiles[0] >= 0 && pe.tiles[0] == pe.tiles[1]) add("edge-slots", {e}, "edge " + std::to_string(e) + " lists one tile twice");
  }
  std::vector<std::vector<int>> users(E);
  for (int x = 0; x < F; ++x)
    for (int e : std::set<int>(patch.tiles[x].edges.begin(), patch.tiles[x].edges.end()))
      if (e >= 0 && e < E) users[e].push_back(x);
  for (const auto& u : users)
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = a + 1; b < u.size(); ++b) ++shared[{std::min(u[a], u[b]), std::max(u[a], u[b])}];
  for (int x = 0; x < F; ++x)
    for (int e : patch.tiles[x].edges)
      if (patch.edges[e].tiles[0] != x && patch.edges[e].tiles[1] != x)
        add("edge-slots", {e, x}, "tile " + std::to_string(x) + " uses edge " + std::to_string(e) + " without a slot");
  for (const auto& [pair, count] : shared)
    if (count > 1)
      add("shared-edge-bound", {pair.first, pair.second},
          "tiles " + std::to_string(pair.first) + " and " + std::to_string(pair.second) + " share " + std::to_string(count) + " edges");

  std::vector<std::multiset<int>> incident(V);
  for (int e = 0; e < E; ++e) {
    incident[patch.edges[e].src].insert(e);
    incident[patch.edges[e].tgt].insert(e);
  }
  std::vector<int> tiles_at(V, 0);
  for (int x = 0; x < F; ++x)
    if (static_cast<int>(patch.tiles[x].edges.size()) == m)
      for (int i = 1; i <= m; ++i)
        if (int v = patch.vertex_of(x, i); v >= 0) ++tiles_at[v];
  for (int v = 0; v < V; ++v) {
    const auto& pv = patch.vertices[v];
    std::multiset<int> listed(pv.edges.begin(), pv.edges.end());
    if (listed != incident[v]) add("vertex-incidence", {v}, "vertex " + std::to_string(v) + " edge list disagrees with edge endpoints");
    int deg = static_cast<int>(pv.edges.size());
    if (deg > n || (pv.interior && deg != n))
      add("vertex-degree", {v}, "vertex " + std::to_string(v) + " has " + std::to_string(deg) + " edges, n = " + std::to_string(n));
    if (pv.interior && tiles_at[v] != n)
      add("vertex-degree", {v}, "interior vertex " + std::to_string(v) + " meets " + std::to_string(tiles_at[v]) + " tiles");
    if (pv.interior && deg == n)
      for (int k = 0; k < deg; ++k) {
        int e1 = pv.edges[k], e2 = pv.edges[(k + 1) % deg];
        bool joined = false;
        for (int t : patch.edges[e1].tiles)
          if (t >= 0 && patch.label_of(t, e2)) joined = true;
        if (!joined) add("vertex-order", {v}, "vertex " + std::to_string(v) + ": consecutive edges share no tile");
      }
  }

  for (int e = 0; e < E; ++e) {
    const auto& pe = patch.edges[e];
    if (pe.tiles[0] < 0 || pe.tiles[1] < 0) continue;
    if (patch.tiles[pe.tiles[0]].color == patch.tiles[pe.tiles[1]].color)
      add("color-law", {pe.tiles[0], pe.tiles[1]}, "adjacent tiles " + std::to_string(pe.tiles[0]) + ", " + std::to_string(pe.tiles[1]) + " share a colour");
    if (patch.reflective && patch.label_of(pe.tiles[0], e) != patch.label_of(pe.tiles[1], e))
      add("reflective-labels", {e}, "edge " + std::to_string(e) + " carries different labels in its two tiles");
  }

  if (patch.reflective) {
    for (int v = 0; v < V; ++v) {
      const auto& pv = patch.vertices[v];
      if (!pv.interior || static_cast<int>(pv.edges.size()) != n) continue;
      auto labels = patch.edge_labels_at_vertex(v);
      bool ok = true;
      for (int k = 0; k < n; ++k) ok = ok && labels[k] == labels[(k + 2) % n] && labels[k] != labels[(k + 1) % n];
      int gap = ((labels[0] - labels[1]) % m + m) % m;
      ok = ok && (gap == 1 || gap == m - 1);
      if (!ok) add("label-alternation", {v}, "labels around vertex " + std::to_string(v) + " do not alternate between neighbours");
    }
    for (int x = 0; x < F; ++x) {
      const auto& t = patch.tiles[x];
      if (t.color != (t.word.size() % 2 ? -1 : 1)) add("word", {x}, "tile " + std::to_string(x) + " colour disagrees with its word length");
      bool labels_ok = std::all_of(t.word.begin(), t.word.end(), [&](int l) { return l >= 1 && l <= m; });
      if (!labels_ok || follow_route(patch, patch.base_tile, t.word) != x)
        add("word", {x}, "word of tile " + std::to_string(x) + " does not lead to it");
    }
  }

  if (V - E + F != 1)
    add("euler", {}, "V - E + F = " + std::to_string(V - E + F) + ", expected 1");
  return report;
}

int follow_route(const TilingPatch& patch, int x, const std::vector<int>& route) {
  for (int label : route) {
    if (x < 0) return -1;
    x = patch.neighbor(x, label);
  }
  return x;
}

std::vector<int> track_between(const TilingPatch& patch, int x, int y) {
  const int F = static_cast<int>(patch.tiles.size());
  if (x < 0 || x >= F || y < 0 || y >= F) throw DomainError("tile id out of range");
  std::vector<int> parent(F, -2), via(F, 0);
  std::deque<int> q{x};
  parent[x] = -1;
  while (!q.empty() && parent[y] == -2) {
    int u = q.front();
    q.pop_front();
    for (int l = 1; l <= patch.sides(); ++l) {
      int w = patch.neighbor(u, l);
      if (w < 0 || parent[w] != -2) continue;
      parent[w] = u;
      via[w] = l;
      q.push_back(w);
    }
  }
  if (parent[y] == -2) throw NoPathError("no track from tile " + std::to_string(x) + " to tile " + std::to_string(y));
  std::vector<int> route;
  for (int u = y; u != x; u = parent[u]) route.push_back(via[u]);
  std::reverse(route.begin(), route.end());
  return route;
}

std::vector<int> random_track(const TilingPatch& patch, int x, int y, std::mt19937_64& rng) {
  const int F = static_cast<int>(patch.tiles.size());
  if (x < 0 || x >= F || y < 0 || y >= F) throw DomainError("tile id out of range");
  std::vector<int> dist(F, -1);
  std::deque<int> q{y};
  dist[y] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int l = 1; l <= patch.sides(); ++l)
      if (int w = patch.neighbor(u, l); w >= 0 && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  if (dist[x] < 0) throw NoPathError("no track from tile " + std::to_string(x) + " to tile " + std::to_string(y));
  std::vector<int> route;
  for (int u = x; u != y;) {
    std::vector<int> options;
    for (int l = 1; l <= patch.sides(); ++l)
      if (int w = patch.neighbor(u, l); w >= 0 && dist[w] == dist[u] - 1) options.push_back(l);
    int l = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    route.push_back(l);
    u = patch.neighbor(u, l);
  }
  return route;
}

std::vector<int> geodesic_through(const TilingPatch& patch, int e) {
  if (e < 0 || e >= static_cast<int>(patch.edges.size())) throw DomainError("edge id out of range");
  const int n = patch.params.n;
  if (n % 2) throw DomainError("geodesics need an even vertex degree");
  std::unordered_set<int> seen{e};
  auto extend = [&](int v) {
    std::vector<int> path;
    int cur = e;
    while (v >= 0 && patch.vertices[v].interior) {
      const auto& list = patch.vertices[v].edges;
      auto it = std::find(list.begin(), list.end(), cur);
      if (it == list.end() || static_cast<int>(list.size()) != n) break;
      int next = list[(it - list.begin() + n / 2) % n];
      if (!seen.insert(next).second) break;
      path.push_back(next);
      const auto& ne = patch.edges[next];
      v = ne.src == v ? ne.tgt : ne.src;
      cur = next;
    }
    return path;
  };
  auto forward = extend(patch.edges[e].tgt);
  auto backward = extend(patch.edges[e].src);
  std::vector<int> out(backward.rbegin(), backward.rend());
  out.push_back(e);
  out.insert(out.end(), forward.begin(), forward.end());
  return out;
}

std::vector<int> coxeter_word(const TilingPatch& patch, int x) {
  if (x < 0 || x >= static_cast<int>(patch.tiles.size())) throw DomainError("tile id out of range");
  return patch.tiles[x].word;
}

std::vector<int> inner_tiles(const TilingPatch& patch) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x)
    if (static_cast<int>(patch.tiles[x].word.size()) < patch.radius) out.push_back(x);
  return out;
}

}  // namespace dirtile
