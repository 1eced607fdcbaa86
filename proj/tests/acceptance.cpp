// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "dirtile/alignment.hpp"
#include "dirtile/errors.hpp"
#include "dirtile/io.hpp"
#include "dirtile/lambda.hpp"
#include "dirtile/mgon.hpp"
#include "dirtile/reversal_closed.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dirtile;
using fixtures::code;
using fixtures::subset;

namespace {

// Each check returns an empty string on success, otherwise the reason.
using Check = std::function<std::string()>;

TilingPatch build(int m, int n, int radius, SignCode c = {}) {
  if (c.size() == 0) c = SignCode::all_ones(m);
  return build_reflective(CoxeterParams::make(m, n), MGonCategory(c), radius);
}

std::vector<ElementMask> masks(const std::vector<ReversalClosedSubset>& v) {
  std::vector<ElementMask> out;
  for (const auto& s : v) out.push_back(s.elements);
  std::sort(out.begin(), out.end());
  return out;
}

std::string counts() {
  const std::size_t known[] = {2, 4, 4};
  for (int m = 3; m <= 5; ++m)
    if (count_isomorphism_classes(m) != known[m - 3]) return "m = " + std::to_string(m) + " count differs";
  for (int m = 3; m <= 12; ++m)
    if (count_isomorphism_classes(m) != oracle::orbit_count(m)) return "m = " + std::to_string(m) + " disagrees with orbit oracle";
  return "";
}

std::string burnside() {
  for (int m = 3; m <= 16; ++m)
    if (count_isomorphism_classes(m) != oracle::orbit_count(m))
      return std::string(m % 2 ? "odd" : "even") + " form wrong at m = " + std::to_string(m);
  return "";
}

std::string triangle() {
  SignCode d = code({1, -1, 1});
  auto got = enumerate_maximal(d);
  if (masks(got) != masks({subset(d, "e,f,fr,rr"), subset(d, "e,f,r,frr")})) return "unexpected subsets";
  if (brute_force_maximal(d) != got) return "brute force differs";
  return "";
}

std::string squares() {
  auto reps = enumerate_representatives(4);
  if (reps.size() != 4) return "expected four canonical codes";
  for (const auto& c : reps) {
    auto got = enumerate_maximal(c.code());
    if (got.size() != 1 || got.front().elements != full_mask(4)) return c.code().str() + ": maximal subset is not D_4";
  }
  SignCode d = code({1, 1, 1, -1});
  auto a = [&](const char* s) { return act_on_code(DihedralElement::parse(4, s), d); };
  const char* eq[7][3] = {{"f", "r", "rr"},     {"f", "fr", "frr"},    {"f", "rrr", "frrr"}, {"r", "fr", "rrr"},
                          {"r", "frr", "frrr"}, {"fr", "rr", "frrr"}, {"rr", "frr", "rrr"}};
  for (auto& e : eq)
    if (a(e[0]) * a(e[1]) * a(e[2]) != d) return std::string("witness ") + e[0] + " " + e[1] + " " + e[2] + " fails";
  return "";
}

std::string m8() {
  SignCode d = code({-1, -1, 1, 1, 1, 1, 1, 1});
  std::vector<ReversalClosedSubset> expected{
      subset(d, "e,f,rr,frr,rrrr,frrrr,rrrrrr,frrrrrr"), subset(d, "e,frr,rrr,frrrrrrr"), subset(d, "e,r,fr,frr"),
      subset(d, "e,frr,frrr,rrrrrrr"), subset(d, "e,frr,rrrrr,frrrrr")};
  return masks(enumerate_maximal(d)) == masks(expected) ? "" : "subsets differ";
}

std::string range_claim() {
  for (int m = 3; m <= 10; ++m)
    for (unsigned c = 0; c < (1u << m); ++c) {
      SignCode d = SignCode::from_mask(m, c);
      auto got = enumerate_maximal(d);
      if (got.empty() || got.front().size() < 4) return d.str() + " has no subset with 4 elements";
    }
  return "";
}

std::string lifting() {
  SignCode d = code({1, -1, 1});
  auto a = lift_repeat(subset(d, "e,f,fr,rr"), 2), b = lift_repeat(subset(d, "e,f,r,frr"), 2);
  SignCode dd = code({1, -1, 1, 1, -1, 1});
  if (a.delta != dd || b.delta != dd) return "lifted code wrong";
  if (a.elements != parse_subset(6, "e,f,fr,rr,rrr,frrr,frrrr,rrrrr") || b.elements != parse_subset(6, "e,f,r,frr,rrr,frrr,rrrr,frrrrr"))
    return "lifted subsets differ";
  if (masks(brute_force_maximal(dd)) != masks({a, b})) return "brute force on D_6 finds other maximal subsets";
  return "";
}

std::string reflective_patches() {
  std::string failures;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {3, 6}, {6, 3}, {5, 4}, {3, 8}, {7, 4}}) {
    std::string tag = "{" + std::to_string(m) + "," + std::to_string(n) + "}";
    try {
      auto p = build(m, n, 3);
      auto rep = validate(p);
      if (!rep.ok()) failures += tag + " " + rep.violations.front().kind + "; ";
    } catch (const Error& e) {
      failures += tag + " not buildable: " + e.what() + "; ";
    }
  }
  if (!failures.empty()) failures.resize(failures.size() - 2);
  return failures;
}

std::string realignment() {
  auto p = build(5, 4, 3);
  auto tau = EdgeReversal::from_tiles(p, std::vector<SignCode>(p.tiles.size(), fixtures::pentagon_tau()));
  auto r = apply_reversal(p, tau, fixtures::pentagon_target());
  auto rf = DihedralElement::rotation(5) * DihedralElement::reflection(5);
  const int perm[5] = {1, 5, 4, 3, 2};
  for (std::size_t x = 0; x < p.tiles.size(); ++x) {
    if (r.sigma[x] != rf) return "tile " + std::to_string(x) + " has sigma " + r.sigma[x].name();
    for (int i = 0; i < 5; ++i)
      if (r.patch.tiles[x].edges[i] != p.tiles[x].edges[perm[i] - 1]) return "relabelling differs at tile " + std::to_string(x);
  }
  auto rep = validate(r.patch);
  return rep.ok() ? "" : rep.violations.front().message;
}

struct Generated {
  ReflectionScheme scheme;
  TilingPatch patch;
  EdgeReversal tau;
};

std::vector<Generated> generated() {
  std::vector<Generated> out;
  for (const auto& s : {fixtures::square_scheme(), fixtures::pentagon_scheme()}) {
    auto p = build(s.base.sides(), s.n, 4, s.base.code());
    auto tau = generate_from_scheme(p, s, DihedralElement::identity(s.base.sides()));
    out.push_back({s, std::move(p), std::move(tau)});
  }
  return out;
}

std::string generation() {
  std::mt19937_64 rng(1);
  for (const auto& g : generated()) {
    if (!check_phi_generated(g.patch, g.tau, g.scheme)) return "check_phi_generated fails";
    SignCode start = g.tau.tile_tuple(g.patch, g.patch.base_tile);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.patch.tiles.size()) - 1);
    for (std::size_t x = 0; x < g.patch.tiles.size(); ++x)
      for (int k = 0; k < 10; ++k) {
        int z = pick(rng);
        auto route = random_track(g.patch, g.patch.base_tile, z, rng);
        auto rest = random_track(g.patch, z, static_cast<int>(x), rng);
        route.insert(route.end(), rest.begin(), rest.end());
        if (start * phi_of_word(g.scheme.phi, route) != g.tau.tile_tuple(g.patch, static_cast<int>(x)))
          return "track disagreement at tile " + std::to_string(x);
      }
  }
  return "";
}

std::string reflections() {
  int geodesics = 0;
  for (const auto& g : generated()) {
    const auto& p = g.patch;
    auto plain = EdgeReversal::constant(p);
    std::set<std::set<int>> seen;
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
      if (!p.edges[e].interior) continue;
      auto geo = geodesic_through(p, static_cast<int>(e));
      if (!seen.insert(std::set<int>(geo.begin(), geo.end())).second) continue;
      auto gamma = reflect_automorphism(p, geo);
      if (domain_size(gamma) == 0) return "empty reflection domain";
      int label = p.label_of(p.edges[e].tiles[0], static_cast<int>(e));
      SignCode psi = infer_psi(p, g.tau, gamma);
      if (psi != g.scheme.phi[label - 1]) return "psi differs from phi_" + std::to_string(label);
      if (!check_psi_reflective(p, g.tau, gamma, psi)) return "commuting square fails on edge " + std::to_string(e);
      if (!infer_psi(p, plain, gamma).is_all_ones() || !check_psi_reflective(p, plain, gamma, SignCode::all_ones(p.sides())))
        return "reflective tiling gives nontrivial psi";
      ++geodesics;
    }
  }
  return geodesics > 0 ? "" : "no interior geodesics";
}

std::string composites() {
  auto s = fixtures::pentagon_scheme();
  auto p = build(5, 4, 4, s.base.code());
  auto tau = generate_from_scheme(p, s, DihedralElement::identity(5));
  auto g = [&](int label) { return geodesic_through(p, p.tiles[p.base_tile].edges[label - 1]); };
  auto t = composite_symmetry(p, tau, {g(5), g(2)});
  if (!t.verified || t.psi != code({-1, -1, 1, 1, 1})) return "translation gives " + t.psi.str();
  auto r = composite_symmetry(p, tau, {g(1), g(2)});
  if (!r.verified || r.psi != code({1, 1, -1, -1, -1})) return "rotation gives " + r.psi.str();
  return "";
}

std::string degree6() {
  auto params = CoxeterParams::make(4, 6);
  auto patch = build(4, 6, 2);
  int found = 0;
  for (unsigned c = 0; c < 16; ++c) {
    SignCode target = SignCode::from_mask(4, c);
    for (const auto& gamma : enumerate_maximal(target)) {
      std::vector<std::vector<SignCode>> per(4);
      for (const auto& s : gamma.members()) {
        SignCode v = target * act_on_code(s, target);
        for (int i = 0; i < 4; ++i)
          if (v[i] == 1 && std::find(per[i].begin(), per[i].end(), v) == per[i].end()) per[i].push_back(v);
      }
      for (const auto& a : per[0])
        for (const auto& b : per[1])
          for (const auto& x : per[2])
            for (const auto& y : per[3]) {
              std::vector<SignCode> phi{a, b, x, y};
              if (!phi_respects_relations(params, phi) || !phi_consistent_on_patch(patch, phi)) continue;
              ++found;
              for (const auto& v : phi)
                if (!v.is_all_ones()) return "nontrivial scheme for target " + target.str();
            }
    }
  }
  return found ? "" : "search found no schemes at all";
}

std::string determinism() {
  std::string path = "acceptance_patch.json";
  for (auto p : {build(4, 4, 3), build(5, 4, 3, code({-1, -1, -1, 1, 1})), build(3, 8, 2), build(7, 4, 2)}) {
    std::string first = patch_to_json(p);
    write_text_file(path, first);
    auto q = patch_from_json(read_text_file(path));
    write_text_file(path, patch_to_json(q));
    if (read_text_file(path) != first) return "patch bytes differ after a round trip";
    if (!(q == p)) return "patch round trip is lossy";
  }
  std::remove(path.c_str());
  for (const auto& g : generated()) {
    std::string t = reversal_to_json(g.patch, g.tau);
    if (reversal_from_json(t, g.patch) != g.tau || reversal_to_json(g.patch, reversal_from_json(t, g.patch)) != t)
      return "edge reversal round trip differs";
    std::string s = scheme_to_json(g.scheme);
    if (!(scheme_from_json(s) == g.scheme) || scheme_to_json(scheme_from_json(s)) != s) return "scheme round trip differs";
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria{
      {"isomorphism-class counts", counts},
      {"Burnside closed forms, m = 3..16", burnside},
      {"reversal-closed triangle", triangle},
      {"reversal-closed squares", squares},
      {"m = 8 worked example", m8},
      {"subset of size >= 4 for every code, m <= 10", range_claim},
      {"repeat lifting", lifting},
      {"reflective patch validity", reflective_patches},
      {"pentagon realignment", realignment},
      {"scheme generation and track independence", generation},
      {"geodesic reflections", reflections},
      {"translation and rotation composites", composites},
      {"degree 6 schemes are trivial", degree6},
      {"I/O determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = criteria[i].second();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (reason.empty() ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " (" << static_cast<long>(ms) << " ms)";
    if (!reason.empty()) {
      line << ": " << reason;
      ++failed;
    }
    std::cout << line.str() << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
