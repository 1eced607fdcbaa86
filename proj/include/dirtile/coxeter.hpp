#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dirtile {

// Coxeter data for the reflection group of an {m,n} tiling.
// matrix[i][j] is 1 on the diagonal, n/2 for cyclically adjacent generators
// and 0 (infinite order) otherwise.
struct CoxeterParams {
  int m = 4;
  int n = 4;
  std::vector<std::vector<int>> matrix;

  static CoxeterParams make(int m, int n);
  int order(int i, int j) const { return matrix[i][j]; }  // 0-based
  bool euclidean() const { return (m - 2) * (n - 2) == 4; }

  friend bool operator==(const CoxeterParams&, const CoxeterParams&) = default;
};

// Exact word problem in W_{m,n}. Elements are shortlex-least reduced words,
// letters 0..m-1 stored as chars. Not safe for concurrent use (memoizes).
class CoxeterGroup {
 public:
  using Word = std::string;

  explicit CoxeterGroup(const CoxeterParams& params);

  const CoxeterParams& params() const { return params_; }
  bool is_descent(const Word& w, int s) const;  // length(w s) < length(w)
  Word multiply(const Word& w, int s) const;
  Word reduce(std::span<const int> letters) const;  // 0-based letters, any word
  Word product(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;
  // Minimal element of the coset w<s_a, s_b>.
  Word min_coset_rep(Word w, int a, int b) const;

  static std::vector<int> letters(const Word& w);

 private:
  struct Info {
    std::vector<Word> braid_class;
    std::uint64_t descents = 0;
  };
  const Info& info_of_canonical(const Word& w) const;
  const Word& canonical_of_reduced(const Word& w) const;

  CoxeterParams params_;
  mutable std::unordered_map<Word, Info> info_;
  mutable std::unordered_map<Word, Word> alias_;
};

}  // namespace dirtile
