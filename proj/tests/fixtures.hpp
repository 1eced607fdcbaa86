#pragma once

// Worked examples shared by the unit tests and the acceptance suite.

#include "dirtile/alignment.hpp"
#include "dirtile/reversal_closed.hpp"

namespace fixtures {

using namespace dirtile;

inline SignCode code(std::initializer_list<int> v) { return SignCode(v); }

inline ReversalClosedSubset subset(const SignCode& delta, const char* names) {
  return make_subset(delta, parse_subset(delta.size(), names));
}

// Square scheme on {4,4}: relations s d1 = t d2, t d1 = s d4, s d2 = s d3, t d3 = t d4.
inline ReflectionScheme square_scheme() {
  SignCode d = code({-1, -1, 1, -1});
  return {MGonCategory(d), MGonCategory(d), 4, subset(d, "e,r,rr,rrr,f,fr,frr,frrr"),
          {code({1, 1, -1, -1}), code({1, 1, -1, -1}), code({-1, -1, 1, 1}), code({-1, -1, 1, 1})}};
}

// Pentagon scheme on {5,4}.
inline ReflectionScheme pentagon_scheme() {
  SignCode base = code({-1, -1, -1, 1, 1}), target = code({1, -1, 1, -1, 1});
  SignCode a = code({1, 1, -1, -1, -1}), one = code({1, 1, 1, 1, 1}), b = code({-1, -1, 1, 1, 1});
  return {MGonCategory(base), MGonCategory(target), 4, subset(target, "e,f,frr,rrr"), {a, one, b, b, b}};
}

// Translation-invariant reversal of the cyclic {4,4} tiling.
inline SignCode translation_start() { return code({1, -1, -1, 1}); }
inline std::vector<SignCode> translation_phi() {
  return {code({1, -1, 1, -1}), code({-1, 1, -1, 1}), code({1, -1, 1, -1}), code({-1, 1, -1, 1})};
}
inline EdgeReversal translation_tau(const TilingPatch& p) {
  std::vector<SignCode> t;
  for (const auto& tile : p.tiles) t.push_back(translation_start() * phi_of_word(translation_phi(), tile.word));
  return EdgeReversal::from_tiles(p, t);
}

// The C_5 realigned from the cyclic pentagon tiling.
inline MGonCategory pentagon_target() { return MGonCategory(code({1, 1, -1, -1, -1})); }
inline SignCode pentagon_tau() { return code({-1, 1, 1, 1, -1}); }

}  // namespace fixtures
