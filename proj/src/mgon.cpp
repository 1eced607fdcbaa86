#include "dirtile/mgon.hpp"

#include <algorithm>
#include <numeric>

#include "dirtile/errors.hpp"

namespace dirtile {

MGonCategory::MGonCategory(SignCode code) : code_(code) { check_sides(code.size()); }

int MGonCategory::source_vertex(int i) const {
  int m = sides();
  if (i < 1 || i > m) throw DomainError("edge index out of range");
  return code_.at(i) > 0 ? i : i % m + 1;
}

int MGonCategory::target_vertex(int i) const {
  int m = sides();
  if (i < 1 || i > m) throw DomainError("edge index out of range");
  return code_.at(i) > 0 ? i % m + 1 : i;
}

SignCode relative_code(const MGonCategory& c, const MGonCategory& c2) { return c.code() * c2.code(); }

std::vector<SignCode> orbit(const SignCode& code) {
  std::vector<SignCode> out;
  for (const auto& s : all_elements(code.size())) out.push_back(act_on_code(s, code));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignCode canonical_form(const SignCode& code) {
  SignCode best = code;
  for (const auto& s : all_elements(code.size())) best = std::min(best, act_on_code(s, code));
  return best;
}

std::uint64_t count_isomorphism_classes(int m) {
  if (m < 3) throw DomainError("m must be at least 3");
  if (m > 62) throw DomainError("m too large for a 64-bit count");
  auto pow2 = [](std::uint64_t k) { return std::uint64_t{1} << k; };
  std::uint64_t mm = static_cast<std::uint64_t>(m);
  std::uint64_t total = pow2(mm);
  if (m % 2 == 1) {
    for (std::uint64_t i = 1; i <= (mm - 1) / 2; ++i) total += 2 * pow2(std::gcd(i, mm));
  } else {
    total += (mm / 2 + 1) * pow2(mm / 2);
    for (std::uint64_t i = 1; i + 1 <= mm / 2; ++i) total += 2 * pow2(std::gcd(i, mm));
  }
  return total / (2 * mm);
}

std::vector<MGonCategory> enumerate_representatives(int m) {
  check_sides(m);
  if (m > 24) throw DomainError("enumeration limited to m <= 24");
  std::vector<MGonCategory> reps;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    SignCode c = SignCode::from_mask(m, mask);
    if (canonical_form(c) == c) reps.emplace_back(c);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace dirtile
