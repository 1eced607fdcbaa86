#include <algorithm>

#include "doctest.h"
#include "dirtile/errors.hpp"
#include "dirtile/mgon.hpp"
#include "dirtile/reversal_closed.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dirtile;
using fixtures::code;
using fixtures::subset;

namespace {

ElementMask mask(int m, const char* names) { return parse_subset(m, names); }

std::vector<ElementMask> masks(const std::vector<ReversalClosedSubset>& v) {
  std::vector<ElementMask> out;
  for (const auto& s : v) out.push_back(s.elements);
  std::sort(out.begin(), out.end());
  return out;
}

// Closure law checked straight from tuples.
bool closed_by_tuples(const SignCode& delta, ElementMask g) {
  int m = delta.size();
  auto d = delta.entries();
  auto apply = [&](int idx) {
    auto s = DihedralElement::from_index(m, idx);
    return oracle::act(s.flip(), s.rot(), d);
  };
  for (int a = 0; a < 2 * m; ++a) {
    if (!((g >> a) & 1)) continue;
    for (int b = 0; b < 2 * m; ++b) {
      if (!((g >> b) & 1)) continue;
      auto x = apply(a), y = apply(b);
      std::vector<int> p(m);
      for (int i = 0; i < m; ++i) p[i] = d[i] * x[i] * y[i];
      bool found = false;
      for (int c = 0; c < 2 * m && !found; ++c) found = ((g >> c) & 1) && apply(c) == p;
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(is_reversal_closed(code({1, 1, 1, -1, -1}), mask(5, "e,f,rrr,frrr")));
  for (int m = 3; m <= 6; ++m) {
    CHECK(is_reversal_closed(SignCode::all_ones(m), full_mask(m)));
    for (unsigned c = 0; c < (1u << m); ++c) {
      SignCode d = SignCode::from_mask(m, c);
      CHECK(is_reversal_closed(d, ElementMask{1}));
      for (int s = 0; s < 2 * m; ++s) CHECK(is_reversal_closed(d, ElementMask{1} | (ElementMask{1} << s)));
    }
  }
  CHECK_FALSE(is_reversal_closed(code({1, -1, 1}), mask(3, "e,r,rr")));
}

TEST_CASE("closure agrees with the tuple oracle") {
  for (int m = 3; m <= 4; ++m)
    for (unsigned c = 0; c < (1u << m); ++c) {
      SignCode d = SignCode::from_mask(m, c);
      for (ElementMask g = 0; g < (ElementMask{1} << (2 * m)); ++g) REQUIRE(is_reversal_closed(d, g) == closed_by_tuples(d, g));
    }
}

TEST_CASE("triangle") {
  SignCode d = code({1, -1, 1});
  auto got = enumerate_maximal(d);
  CHECK(masks(got) == masks({subset(d, "e,f,fr,rr"), subset(d, "e,f,r,frr")}));
  CHECK(got == brute_force_maximal(d));
  CHECK(enumerate_maximal(SignCode::all_ones(3)).size() == 1);
  CHECK(enumerate_maximal(SignCode::all_ones(3)).front().elements == full_mask(3));
  CHECK_FALSE(conflicts(d).empty());
}

TEST_CASE("squares") {
  for (const auto& c : enumerate_representatives(4)) {
    auto got = enumerate_maximal(c.code());
    REQUIRE(got.size() == 1);
    CHECK(got.front().elements == full_mask(4));
    CHECK(got.front().maximal);
    CHECK(brute_force_maximal(c.code()) == got);
  }
  SignCode d = code({1, 1, 1, -1});
  auto a = [&](const char* s) { return act_on_code(DihedralElement::parse(4, s), d); };
  CHECK(a("f") * a("r") * a("rr") == d);
  CHECK(a("f") * a("fr") * a("frr") == d);
  CHECK(a("f") * a("rrr") * a("frrr") == d);
  CHECK(a("r") * a("fr") * a("rrr") == d);
  CHECK(a("r") * a("frr") * a("frrr") == d);
  CHECK(a("fr") * a("rr") * a("frrr") == d);
  CHECK(a("rr") * a("frr") * a("rrr") == d);
}

TEST_CASE("m = 8 example") {
  SignCode d = code({-1, -1, 1, 1, 1, 1, 1, 1});
  auto got = enumerate_maximal(d);
  std::vector<ReversalClosedSubset> expected{
      subset(d, "e,f,rr,frr,rrrr,frrrr,rrrrrr,frrrrrr"), subset(d, "e,frr,rrr,frrrrrrr"), subset(d, "e,r,fr,frr"),
      subset(d, "e,frr,frrr,rrrrrrr"), subset(d, "e,frr,rrrrr,frrrrr")};
  CHECK(masks(got) == masks(expected));
  CHECK(got.front().size() == 8);
}

TEST_CASE("enumeration matches brute force for m <= 6") {
  for (int m = 3; m <= 6; ++m)
    for (unsigned c = 0; c < (1u << m); ++c) {
      SignCode d = SignCode::from_mask(m, c);
      auto got = enumerate_maximal(d);
      REQUIRE(got == brute_force_maximal(d));
      for (const auto& s : got) {
        REQUIRE(s.contains(DihedralElement::identity(m)));
        REQUIRE(s.maximal);
        REQUIRE(is_reversal_closed(d, s.elements));
      }
      for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = 0; j < got.size(); ++j)
          if (i != j) REQUIRE((got[i].elements & ~got[j].elements) != 0);
    }
}

TEST_CASE("orbit consistency") {
  for (int m = 3; m <= 7; ++m)
    for (const auto& c : enumerate_representatives(m)) {
      auto sizes = [](const SignCode& d) {
        std::vector<int> s;
        for (const auto& g : enumerate_maximal(d)) s.push_back(g.size());
        std::sort(s.begin(), s.end());
        return s;
      };
      auto base = sizes(c.code());
      for (const auto& sigma : all_elements(m)) REQUIRE(sizes(act_on_code(sigma, c.code())) == base);
    }
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_maximal(SignCode::all_ones(13)), DomainError);
  CHECK_THROWS_AS(brute_force_maximal(SignCode::all_ones(9)), DomainError);
  CHECK_THROWS_AS(make_subset(code({1, -1, 1}), mask(3, "e,r,rr")), DomainError);
}

TEST_CASE("conjugation") {
  SignCode d = code({1, -1, 1});
  auto r = DihedralElement::rotation(3, 1);
  std::vector<ReversalClosedSubset> conj;
  for (const auto& g : enumerate_maximal(d)) {
    auto c = conjugate_subset(g, r);
    CHECK(c.delta == act_on_code(r, d));
    CHECK(c.size() == g.size());
    conj.push_back(c);
    CHECK(conjugate_subset(g, DihedralElement::identity(3)) == g);
  }
  CHECK(masks(conj) == masks(brute_force_maximal(act_on_code(r, d))));
  for (int m = 4; m <= 6; ++m)
    for (unsigned c = 0; c < (1u << m); c += 3) {
      SignCode x = SignCode::from_mask(m, c);
      for (const auto& g : enumerate_maximal(x))
        for (const auto& s : all_elements(m)) REQUIRE(is_reversal_closed(act_on_code(s, x), conjugate_subset(g, s).elements));
    }
}

TEST_CASE("stabilizer translates") {
  SignCode d = code({-1, -1, 1, -1, 1, 1});
  auto f = DihedralElement::reflection(6, 0);
  REQUIRE(act_on_code(f, d) == d);
  auto g = subset(d, "e,f,frr,rrrr");
  auto [right, left] = stabilizer_translate(g, f);
  CHECK(left.elements == mask(6, "e,f,rr,frrrr"));
  CHECK(right.elements == g.elements);
  auto [r2, l2] = stabilizer_translate(g, DihedralElement::identity(6));
  CHECK(r2.elements == g.elements);
  CHECK(l2.elements == g.elements);
  CHECK_THROWS_AS(stabilizer_translate(g, DihedralElement::rotation(6, 1)), StabilizerError);
}

TEST_CASE("repeat lift") {
  SignCode d = code({1, -1, 1});
  auto a = lift_repeat(subset(d, "e,f,fr,rr"), 2);
  auto b = lift_repeat(subset(d, "e,f,r,frr"), 2);
  SignCode dd = code({1, -1, 1, 1, -1, 1});
  CHECK(a.delta == dd);
  CHECK(a.elements == mask(6, "e,f,fr,rr,rrr,frrr,frrrr,rrrrr"));
  CHECK(b.elements == mask(6, "e,f,r,frr,rrr,frrr,rrrr,frrrrr"));
  CHECK(masks(brute_force_maximal(dd)) == masks({a, b}));
  CHECK(lift_repeat(subset(d, "e"), 2).elements == mask(6, "e,rrr"));
  CHECK(repeat_code(d, 3).size() == 9);
  for (int m = 3; m <= 4; ++m)
    for (unsigned c = 0; c < (1u << m); ++c) {
      SignCode x = SignCode::from_mask(m, c);
      std::vector<ReversalClosedSubset> lifted;
      for (const auto& g : enumerate_maximal(x)) {
        lifted.push_back(lift_repeat(g, 2));
        REQUIRE(lifted.back().size() == 2 * g.size());
      }
      REQUIRE(masks(lifted) == masks(brute_force_maximal(repeat_code(x, 2))));
    }
}

TEST_CASE("stretch lift") {
  for (unsigned c = 0; c < 16; ++c) {
    SignCode x = SignCode::from_mask(4, c);
    auto l = lift_stretch(make_subset(x, full_mask(4)), 2);
    CHECK(l.elements == mask(8, "e,f,rr,frr,rrrr,frrrr,rrrrrr,frrrrrr"));
    CHECK(l.delta == stretch_code(x, 2));
    CHECK(is_reversal_closed(l.delta, l.elements));
  }
  CHECK(stretch_code(code({-1, 1, 1, 1}), 2) == code({-1, -1, 1, 1, 1, 1, 1, 1}));
  CHECK(lift_stretch(subset(code({1, -1, 1}), "e"), 3).elements == ElementMask{1});
}

TEST_CASE("some maximal subset has at least four elements, m <= 8") {
  for (int m = 3; m <= 8; ++m)
    for (const auto& c : enumerate_representatives(m)) {
      auto got = enumerate_maximal(c.code());
      REQUIRE(got.front().size() >= 4);
    }
}
