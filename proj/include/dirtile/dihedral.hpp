#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dirtile {

// Largest supported m. Codes pack into 32 bits and subsets of D_m into 64.
inline constexpr int kMaxSides = 32;

// A tuple in {+1,-1}^m. Bit i of the mask is set when entry i is -1.
class SignCode {
 public:
  SignCode() = default;
  explicit SignCode(int m);  // all ones
  SignCode(std::initializer_list<int> entries);

  static SignCode from_entries(std::span<const int> entries);
  static SignCode from_mask(int m, std::uint32_t negatives);
  static SignCode all_ones(int m) { return SignCode(m); }
  static SignCode all_minus(int m);
  // Accepts "+--+" and "(1,-1,-1,1)" forms.
  static SignCode parse(std::string_view text);

  int size() const { return m_; }
  int operator[](int i) const { return (neg_ >> i) & 1u ? -1 : 1; }  // 0-based
  int at(int i) const;                                                 // 1-based, checked
  std::uint32_t negatives() const { return neg_; }
  bool is_all_ones() const { return neg_ == 0; }
  std::vector<int> entries() const;

  SignCode operator*(const SignCode& other) const;
  SignCode operator-() const;

  std::string str() const;    // "+--+"
  std::string tuple() const;  // "(1,-1,-1,1)"

  friend bool operator==(const SignCode&, const SignCode&) = default;
  // Lexicographic with +1 before -1; shorter codes first.
  friend std::strong_ordering operator<=>(const SignCode& a, const SignCode& b);

 private:
  int m_ = 0;
  std::uint32_t neg_ = 0;
};

// f^flip r^rot in D_m.
class DihedralElement {
 public:
  DihedralElement() = default;
  DihedralElement(int m, int rot, bool flip = false);

  static DihedralElement identity(int m) { return {m, 0, false}; }
  static DihedralElement rotation(int m, int k = 1) { return {m, k, false}; }
  static DihedralElement reflection(int m, int k = 0) { return {m, k, true}; }
  // Position in e, r, .., r^{m-1}, f, f r, .., f r^{m-1}.
  static DihedralElement from_index(int m, int index);
  // "e", "r^2", "f r^3", "f", and word forms such as "frr" or "rrr".
  static DihedralElement parse(int m, std::string_view text);

  int m() const { return m_; }
  int rot() const { return rot_; }
  bool flip() const { return flip_; }
  int index() const { return (flip_ ? m_ : 0) + rot_; }
  bool is_identity() const { return rot_ == 0 && !flip_; }

  DihedralElement inverse() const;
  std::string name() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend std::strong_ordering operator<=>(const DihedralElement& a, const DihedralElement& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.index() <=> b.index();
  }

 private:
  int m_ = 3;
  int rot_ = 0;
  bool flip_ = false;
};

DihedralElement compose(const DihedralElement& a, const DihedralElement& b);
inline DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) { return compose(a, b); }

SignCode act_on_code(const DihedralElement& sigma, const SignCode& delta);
int act_on_index(const DihedralElement& sigma, int i);  // 1-based
int sign(const DihedralElement& sigma);
DihedralElement conjugate(const DihedralElement& sigma, const DihedralElement& tau);

// The code action that moves entries along act_on_index:
// transport(s, d)[s(i)] = sign(s) * d[i]. Equals act_on_code(mirror(s), d).
SignCode transport_code(const DihedralElement& sigma, const SignCode& delta);
// Automorphism r -> r^{-1}, f -> f.
DihedralElement mirror(const DihedralElement& sigma);

// All 2m elements in canonical order.
std::vector<DihedralElement> all_elements(int m);

// Subsets of D_m as bitmasks over canonical indices.
using ElementMask = std::uint64_t;

ElementMask full_mask(int m);
ElementMask mask_of(std::span<const DihedralElement> elements);
std::vector<DihedralElement> elements_of(int m, ElementMask mask);
ElementMask parse_subset(int m, std::string_view text);  // "{e, f, f r^1}" or "e,f,frr"
std::string format_subset(int m, ElementMask mask);

void check_sides(int m);

}  // namespace dirtile
