#include "doctest.h"
#include "dirtile/errors.hpp"
#include "dirtile/lambda.hpp"
#include "dirtile/reversal_closed.hpp"

using namespace dirtile;

TEST_CASE("multiply") {
  CHECK(multiply(SignCode{1, 1, -1, -1, 1}, SignCode{1, 1, 1, 1, -1}) == SignCode{1, 1, -1, -1, -1});
  CHECK(multiply(SignCode{1, 1, -1, -1, 1}, SignCode{-1, 1, 1, 1, 1}) == SignCode{-1, 1, -1, -1, 1});
  CHECK_THROWS_AS(multiply(SignCode{1, 1, 1}, SignCode{1, 1, 1, 1}), DimensionError);
}

TEST_CASE("level 2 is an elementary abelian 2-group") {
  for (int m = 3; m <= 6; ++m) {
    unsigned N = 1u << m;
    for (unsigned a = 0; a < N; ++a) {
      SignCode x = SignCode::from_mask(m, a);
      REQUIRE(multiply(x, x).is_all_ones());
      REQUIRE(multiply(x, SignCode::all_ones(m)) == x);
      for (unsigned b = 0; b < N; ++b) {
        SignCode y = SignCode::from_mask(m, b);
        REQUIRE(multiply(x, y) == multiply(y, x));
        for (unsigned c = 0; c < N; c += 3) {
          SignCode z = SignCode::from_mask(m, c);
          REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        }
      }
    }
  }
}

TEST_CASE("restricted direction sets") {
  auto cyc = MGonCategory::cyclic(5);
  auto s = build_restricted(cyc, cyc);
  CHECK(s.kind == DirectionSetKind::dihedral_restricted);
  CHECK(s.members == std::vector<SignCode>{SignCode::all_ones(5), SignCode::all_minus(5)});

  MGonCategory target(SignCode{1, 1, -1, -1, -1});
  auto t = build_restricted(cyc, target);
  CHECK(contains(t, SignCode{1, 1, -1, -1, -1}));
  CHECK(contains(t, SignCode{-1, 1, 1, 1, -1}));
  CHECK_FALSE(contains(t, SignCode::all_ones(5)));

  auto g = build_restricted(cyc, target, ElementMask{1});
  CHECK(g.members == std::vector<SignCode>{SignCode::all_ones(5)});
  CHECK(contains(g, SignCode::all_ones(5)));
  CHECK_FALSE(contains(g, SignCode{1, 1, -1, -1, -1}));

  auto full = full_direction_set(cyc);
  for (unsigned mask = 0; mask < 32; ++mask) CHECK(contains(full, SignCode::from_mask(5, mask)));
  CHECK_THROWS_AS(build_restricted(cyc, MGonCategory::cyclic(4)), DimensionError);
}

TEST_CASE("restricted sets: sizes and inclusions") {
  for (int m = 3; m <= 6; ++m)
    for (unsigned a = 0; a < (1u << m); ++a)
      for (unsigned b = 0; b < (1u << m); b += 5) {
        MGonCategory base(SignCode::from_mask(m, a)), target(SignCode::from_mask(m, b));
        auto d = build_restricted(base, target);
        REQUIRE(d.members.size() == orbit(target).size());
        auto own = build_restricted(target, target);
        for (const auto& s : enumerate_maximal(target.code())) {
          auto g = build_restricted(base, target, s.elements);
          for (const auto& c : g.members) REQUIRE(contains(own, c));
        }
      }
}

TEST_CASE("products stay inside the gamma slice") {
  for (int m = 3; m <= 6; ++m)
    for (unsigned b = 0; b < (1u << m); ++b) {
      SignCode d = SignCode::from_mask(m, b);
      for (const auto& g : enumerate_maximal(d)) {
        auto lam = build_restricted(MGonCategory(d), MGonCategory(d), g.elements);
        std::vector<SignCode> slice;
        for (const auto& s : g.members()) slice.push_back(act_on_code(s, d));
        for (const auto& s : g.members())
          for (const auto& tau : lam.members) {
            SignCode p = act_on_code(s, d) * tau;
            REQUIRE(std::find(slice.begin(), slice.end(), p) != slice.end());
          }
      }
    }
}
