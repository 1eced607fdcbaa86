#pragma once

#include <optional>
#include <vector>

#include "dirtile/dihedral.hpp"
#include "dirtile/mgon.hpp"

namespace dirtile {

inline SignCode multiply(const SignCode& a, const SignCode& b) { return a * b; }

enum class DirectionSetKind { full, dihedral_restricted, gamma_restricted };

struct RestrictedDirectionSet {
  DirectionSetKind kind = DirectionSetKind::full;
  MGonCategory base;
  MGonCategory target;
  std::optional<ElementMask> gamma;
  std::vector<SignCode> members;  // sorted, empty for the full set
};

RestrictedDirectionSet full_direction_set(const MGonCategory& base);

// Without gamma: { base * s(target) : s in D_m }. With gamma: { target * s(target) : s in gamma }.
RestrictedDirectionSet build_restricted(const MGonCategory& base, const MGonCategory& target,
                                        std::optional<ElementMask> gamma = std::nullopt);

bool contains(const RestrictedDirectionSet& set, const SignCode& code);

}  // namespace dirtile
