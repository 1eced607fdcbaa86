#include "dirtile/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dirtile/errors.hpp"

namespace dirtile {

CoxeterParams CoxeterParams::make(int m, int n) {
  if (m < 3 || m > 32) throw InvalidParamsError("m must lie in [3, 32], got " + std::to_string(m));
  if (n < 4 || n % 2 != 0)
    throw InvalidParamsError("{" + std::to_string(m) + "," + std::to_string(n) +
                             "}: a reflective tiling needs an even vertex degree n >= 4");
  if ((m - 2) * (n - 2) < 4)
    throw InvalidParamsError("{" + std::to_string(m) + "," + std::to_string(n) + "} is spherical");
  CoxeterParams p;
  p.m = m;
  p.n = n;
  p.matrix.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    p.matrix[i][i] = 1;
    int j = (i + 1) % m;
    p.matrix[i][j] = p.matrix[j][i] = n / 2;
  }
  return p;
}

CoxeterGroup::CoxeterGroup(const CoxeterParams& params) : params_(params) {}

std::vector<int> CoxeterGroup::letters(const Word& w) {
  std::vector<int> v;
  for (char c : w) v.push_back(static_cast<unsigned char>(c));
  return v;
}

const CoxeterGroup::Word& CoxeterGroup::canonical_of_reduced(const Word& w) const {
  if (auto it = alias_.find(w); it != alias_.end()) return it->second;
  // Matsumoto: reduced words of one element are connected by braid moves.
  std::vector<Word> cls{w};
  std::unordered_set<Word> seen{w};
  for (std::size_t q = 0; q < cls.size(); ++q) {
    Word cur = cls[q];
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      int a = static_cast<unsigned char>(cur[p]), b = static_cast<unsigned char>(cur[p + 1]);
      if (a == b) continue;
      int k = params_.order(a, b);
      if (k < 2 || p + k > cur.size()) continue;
      bool alternating = true;
      for (int t = 0; t < k && alternating; ++t)
        alternating = static_cast<unsigned char>(cur[p + t]) == (t % 2 ? b : a);
      if (!alternating) continue;
      Word next = cur;
      for (int t = 0; t < k; ++t) next[p + t] = static_cast<char>(t % 2 ? a : b);
      if (seen.insert(next).second) cls.push_back(next);
    }
  }
  Word canon = *std::min_element(cls.begin(), cls.end());
  Info info;
  for (const auto& v : cls) {
    if (!v.empty()) info.descents |= std::uint64_t{1} << static_cast<unsigned char>(v.back());
    alias_.emplace(v, canon);
  }
  info.braid_class = std::move(cls);
  info_.emplace(canon, std::move(info));
  return alias_.at(w);
}

const CoxeterGroup::Info& CoxeterGroup::info_of_canonical(const Word& w) const {
  if (auto it = info_.find(w); it != info_.end()) return it->second;
  return info_.at(canonical_of_reduced(w));
}

bool CoxeterGroup::is_descent(const Word& w, int s) const { return (info_of_canonical(w).descents >> s) & 1; }

CoxeterGroup::Word CoxeterGroup::multiply(const Word& w, int s) const {
  if (s < 0 || s >= params_.m) throw DomainError("generator index out of range");
  const Info& info = info_of_canonical(w);
  if ((info.descents >> s) & 1) {
    for (const auto& v : info.braid_class)
      if (!v.empty() && static_cast<unsigned char>(v.back()) == s) return canonical_of_reduced(v.substr(0, v.size() - 1));
  }
  return canonical_of_reduced(w + static_cast<char>(s));
}

CoxeterGroup::Word CoxeterGroup::reduce(std::span<const int> word) const {
  Word w;
  for (int s : word) w = multiply(w, s);
  return w;
}

CoxeterGroup::Word CoxeterGroup::product(const Word& a, const Word& b) const {
  Word w = a;
  for (char c : b) w = multiply(w, static_cast<unsigned char>(c));
  return w;
}

CoxeterGroup::Word CoxeterGroup::inverse(const Word& w) const {
  Word r(w.rbegin(), w.rend());
  return canonical_of_reduced(r);
}

CoxeterGroup::Word CoxeterGroup::min_coset_rep(Word w, int a, int b) const {
  while (true) {
    if (is_descent(w, a))
      w = multiply(w, a);
    else if (is_descent(w, b))
      w = multiply(w, b);
    else
      return w;
  }
}

}  // namespace dirtile
