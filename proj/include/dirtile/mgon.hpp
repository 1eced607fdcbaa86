#pragma once

#include <cstdint>
#include <vector>

#include "dirtile/dihedral.hpp"

namespace dirtile {

// An m-gon category, stored as its code: entry i is +1 iff d^i s = v^i.
class MGonCategory {
 public:
  MGonCategory() = default;
  explicit MGonCategory(SignCode code);

  static MGonCategory cyclic(int m) { return MGonCategory(SignCode::all_ones(m)); }

  int sides() const { return code_.size(); }
  const SignCode& code() const { return code_; }
  bool is_cyclic() const { return code_.is_all_ones(); }

  // Derived views of the composition relations (1-based i).
  // Edge d^i runs from vertex v^i to v^{i+1} when the entry is +1.
  int source_vertex(int i) const;
  int target_vertex(int i) const;

  friend bool operator==(const MGonCategory&, const MGonCategory&) = default;
  friend auto operator<=>(const MGonCategory& a, const MGonCategory& b) { return a.code_ <=> b.code_; }

 private:
  SignCode code_ = SignCode::all_ones(3);
};

SignCode relative_code(const MGonCategory& c, const MGonCategory& c2);

// Sorted orbit of the code under D_m.
std::vector<SignCode> orbit(const SignCode& code);
inline std::vector<SignCode> orbit(const MGonCategory& c) { return orbit(c.code()); }

SignCode canonical_form(const SignCode& code);
inline SignCode canonical_form(const MGonCategory& c) { return canonical_form(c.code()); }

// Closed forms of the Burnside count.
std::uint64_t count_isomorphism_classes(int m);

std::vector<MGonCategory> enumerate_representatives(int m);

}  // namespace dirtile
