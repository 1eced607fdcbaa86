#include "dirtile/lambda.hpp"

#include <algorithm>

#include "dirtile/errors.hpp"

namespace dirtile {

RestrictedDirectionSet full_direction_set(const MGonCategory& base) {
  RestrictedDirectionSet s;
  s.kind = DirectionSetKind::full;
  s.base = base;
  s.target = base;
  return s;
}

RestrictedDirectionSet build_restricted(const MGonCategory& base, const MGonCategory& target,
                                        std::optional<ElementMask> gamma) {
  int m = base.sides();
  if (target.sides() != m) throw DimensionError("base and target differ in m");
  RestrictedDirectionSet s;
  s.base = base;
  s.target = target;
  s.gamma = gamma;
  const SignCode& t = target.code();
  if (gamma) {
    if (*gamma & ~full_mask(m)) throw DomainError("gamma is not a subset of D_m");
    s.kind = DirectionSetKind::gamma_restricted;
    for (const auto& sigma : elements_of(m, *gamma)) s.members.push_back(t * act_on_code(sigma, t));
  } else {
    s.kind = DirectionSetKind::dihedral_restricted;
    for (const auto& sigma : all_elements(m)) s.members.push_back(base.code() * act_on_code(sigma, t));
  }
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  return s;
}

bool contains(const RestrictedDirectionSet& set, const SignCode& code) {
  if (code.size() != set.base.sides()) throw DimensionError("code length differs from the set's m");
  if (set.kind == DirectionSetKind::full) return true;
  return std::binary_search(set.members.begin(), set.members.end(), code);
}

}  // namespace dirtile
