#pragma once

#include <utility>
#include <vector>

#include "dirtile/dihedral.hpp"

namespace dirtile {

struct ReversalClosedSubset {
  SignCode delta;
  ElementMask elements = 0;
  bool maximal = false;

  int m() const { return delta.size(); }
  int size() const;
  bool contains(const DihedralElement& sigma) const { return (elements >> sigma.index()) & 1; }
  std::vector<DihedralElement> members() const { return elements_of(m(), elements); }
  std::string str() const { return format_subset(m(), elements); }

  friend bool operator==(const ReversalClosedSubset&, const ReversalClosedSubset&) = default;
};

inline constexpr int kDefaultEnumerationBound = 12;
inline constexpr int kBruteForceBound = 8;

bool is_reversal_closed(const SignCode& delta, ElementMask gamma);
// Checked constructor; the maximal flag is computed (false beyond the enumeration bound).
ReversalClosedSubset make_subset(const SignCode& delta, ElementMask gamma);
bool is_reversal_closed(const SignCode& delta, std::span<const DihedralElement> gamma);

// Pairs (a, b) with no s in D_m satisfying delta * a(delta) * b(delta) = s(delta).
std::vector<std::pair<DihedralElement, DihedralElement>> conflicts(const SignCode& delta);

// Sorted by size (largest first), then by element order.
std::vector<ReversalClosedSubset> enumerate_maximal(const SignCode& delta, int bound = kDefaultEnumerationBound);
std::vector<ReversalClosedSubset> brute_force_maximal(const SignCode& delta);

ReversalClosedSubset conjugate_subset(const ReversalClosedSubset& gamma, const DihedralElement& sigma);
// Returns (gamma * sigma, sigma * gamma); sigma must fix delta.
std::pair<ReversalClosedSubset, ReversalClosedSubset> stabilizer_translate(const ReversalClosedSubset& gamma,
                                                                           const DihedralElement& sigma);
ReversalClosedSubset lift_repeat(const ReversalClosedSubset& gamma, int k);
ReversalClosedSubset lift_stretch(const ReversalClosedSubset& gamma, int k);

SignCode repeat_code(const SignCode& delta, int k);
SignCode stretch_code(const SignCode& delta, int k);

}  // namespace dirtile
