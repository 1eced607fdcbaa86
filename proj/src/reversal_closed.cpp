#include "dirtile/reversal_closed.hpp"

#include <algorithm>
#include <bit>

#include "dirtile/errors.hpp"

namespace dirtile {

namespace {

// witness[a][b]: mask of s with delta * a(delta) * b(delta) = s(delta).
struct WitnessTable {
  int m;
  std::vector<std::vector<ElementMask>> witness;

  explicit WitnessTable(const SignCode& delta) : m(delta.size()), witness(2 * m, std::vector<ElementMask>(2 * m, 0)) {
    std::vector<SignCode> image;
    for (const auto& s : all_elements(m)) image.push_back(act_on_code(s, delta));
    for (int a = 0; a < 2 * m; ++a)
      for (int b = a; b < 2 * m; ++b) {
        SignCode p = delta * image[a] * image[b];
        ElementMask w = 0;
        for (int s = 0; s < 2 * m; ++s)
          if (image[s] == p) w |= ElementMask{1} << s;
        witness[a][b] = witness[b][a] = w;
      }
  }

  bool closed(ElementMask gamma) const {
    for (ElementMask x = gamma; x; x &= x - 1) {
      int a = std::countr_zero(x);
      for (ElementMask y = x; y; y &= y - 1) {
        int b = std::countr_zero(y);
        if (!(witness[a][b] & gamma)) return false;
      }
    }
    return true;
  }
};

void sort_subsets(std::vector<ReversalClosedSubset>& v) {
  auto key = [](const ReversalClosedSubset& s) {
    std::vector<int> idx;
    for (const auto& e : s.members()) idx.push_back(e.index());
    return idx;
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return key(a) < key(b);
  });
}

void bron_kerbosch(const std::vector<ElementMask>& adj, ElementMask r, ElementMask p, ElementMask x,
                   std::vector<ElementMask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  ElementMask px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (ElementMask t = px; t; t &= t - 1) {
    int u = std::countr_zero(t);
    int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (ElementMask cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    ElementMask bit = ElementMask{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

ReversalClosedSubset checked(const SignCode& delta, ElementMask elements, bool maximal) {
  if (!is_reversal_closed(delta, elements)) throw Error("internal: produced a subset that is not reversal-closed");
  return {delta, elements, maximal};
}

}  // namespace

int ReversalClosedSubset::size() const { return std::popcount(elements); }

bool is_reversal_closed(const SignCode& delta, ElementMask gamma) {
  check_sides(delta.size());
  if (gamma & ~full_mask(delta.size())) throw DomainError("subset contains indices beyond D_m");
  return WitnessTable(delta).closed(gamma);
}

ReversalClosedSubset make_subset(const SignCode& delta, ElementMask gamma) {
  if (!is_reversal_closed(delta, gamma)) throw DomainError(format_subset(delta.size(), gamma) + " is not reversal-closed for " + delta.str());
  bool maximal = false;
  if (delta.size() <= kDefaultEnumerationBound)
    for (const auto& s : enumerate_maximal(delta)) maximal = maximal || s.elements == gamma;
  return {delta, gamma, maximal};
}

bool is_reversal_closed(const SignCode& delta, std::span<const DihedralElement> gamma) {
  for (const auto& e : gamma)
    if (e.m() != delta.size()) throw DimensionError("element of D_" + std::to_string(e.m()) + " with code of length " + std::to_string(delta.size()));
  return is_reversal_closed(delta, gamma.empty() ? 0 : mask_of(gamma));
}

std::vector<std::pair<DihedralElement, DihedralElement>> conflicts(const SignCode& delta) {
  check_sides(delta.size());
  WitnessTable t(delta);
  int m = delta.size();
  std::vector<std::pair<DihedralElement, DihedralElement>> out;
  for (int a = 0; a < 2 * m; ++a)
    for (int b = a; b < 2 * m; ++b)
      if (!t.witness[a][b]) out.emplace_back(DihedralElement::from_index(m, a), DihedralElement::from_index(m, b));
  return out;
}

std::vector<ReversalClosedSubset> enumerate_maximal(const SignCode& delta, int bound) {
  int m = delta.size();
  check_sides(m);
  if (m > bound) throw DomainError("m = " + std::to_string(m) + " exceeds the enumeration bound " + std::to_string(bound));
  WitnessTable t(delta);
  std::vector<ElementMask> adj(2 * m, 0);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b)
      if (a != b && t.witness[a][b]) adj[a] |= ElementMask{1} << b;

  std::vector<ElementMask> cliques;
  bron_kerbosch(adj, 0, full_mask(m), 0, cliques);

  std::vector<ReversalClosedSubset> out;
  for (ElementMask c : cliques)
    if (t.closed(c)) out.push_back({delta, c, true});
  sort_subsets(out);
  return out;
}

std::vector<ReversalClosedSubset> brute_force_maximal(const SignCode& delta) {
  int m = delta.size();
  check_sides(m);
  if (m > kBruteForceBound) throw DomainError("brute force limited to m <= " + std::to_string(kBruteForceBound));
  WitnessTable t(delta);
  const std::size_t count = std::size_t{1} << (2 * m);
  std::vector<char> closed(count, 0), closed_superset(count, 0);
  for (std::size_t s = 0; s < count; ++s) closed[s] = t.closed(s);
  for (std::size_t s = count; s-- > 0;) {
    bool any = false;
    for (int b = 0; b < 2 * m && !any; ++b)
      if (!((s >> b) & 1)) any = closed_superset[s | (std::size_t{1} << b)];
    closed_superset[s] = closed[s] || any;
  }
  std::vector<ReversalClosedSubset> out;
  for (std::size_t s = 1; s < count; ++s) {
    if (!closed[s]) continue;
    bool maximal = true;
    for (int b = 0; b < 2 * m && maximal; ++b)
      if (!((s >> b) & 1) && closed_superset[s | (std::size_t{1} << b)]) maximal = false;
    if (maximal) out.push_back({delta, static_cast<ElementMask>(s), true});
  }
  sort_subsets(out);
  return out;
}

ReversalClosedSubset conjugate_subset(const ReversalClosedSubset& gamma, const DihedralElement& sigma) {
  if (sigma.m() != gamma.m()) throw DimensionError("element and subset differ in m");
  ElementMask out = 0;
  for (const auto& tau : gamma.members()) out |= ElementMask{1} << conjugate(sigma, tau).index();
  return checked(act_on_code(sigma, gamma.delta), out, gamma.maximal);
}

std::pair<ReversalClosedSubset, ReversalClosedSubset> stabilizer_translate(const ReversalClosedSubset& gamma,
                                                                           const DihedralElement& sigma) {
  if (sigma.m() != gamma.m()) throw DimensionError("element and subset differ in m");
  if (act_on_code(sigma, gamma.delta) != gamma.delta)
    throw StabilizerError(sigma.name() + " does not fix " + gamma.delta.str());
  ElementMask right = 0, left = 0;
  for (const auto& tau : gamma.members()) {
    right |= ElementMask{1} << compose(tau, sigma).index();
    left |= ElementMask{1} << compose(sigma, tau).index();
  }
  return {checked(gamma.delta, right, gamma.maximal), checked(gamma.delta, left, gamma.maximal)};
}

SignCode repeat_code(const SignCode& delta, int k) {
  int m = delta.size();
  if (k < 1 || k * m > kMaxSides) throw DomainError("lifted m out of range");
  std::vector<int> v;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) v.push_back(delta[i]);
  return SignCode::from_entries(v);
}

SignCode stretch_code(const SignCode& delta, int k) {
  int m = delta.size();
  if (k < 1 || k * m > kMaxSides) throw DomainError("lifted m out of range");
  std::vector<int> v;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) v.push_back(delta[i]);
  return SignCode::from_entries(v);
}

ReversalClosedSubset lift_repeat(const ReversalClosedSubset& gamma, int k) {
  if (k < 2) throw DomainError("lift factor must be at least 2");
  int m = gamma.m();
  SignCode lifted = repeat_code(gamma.delta, k);
  ElementMask out = 0;
  for (const auto& s : gamma.members())
    for (int j = 0; j < k; ++j) out |= ElementMask{1} << DihedralElement(k * m, s.rot() + j * m, s.flip()).index();
  return checked(lifted, out, gamma.maximal);
}

ReversalClosedSubset lift_stretch(const ReversalClosedSubset& gamma, int k) {
  if (k < 2) throw DomainError("lift factor must be at least 2");
  int m = gamma.m();
  SignCode lifted = stretch_code(gamma.delta, k);
  ElementMask out = 0;
  for (const auto& s : gamma.members()) out |= ElementMask{1} << DihedralElement(k * m, k * s.rot(), s.flip()).index();
  return checked(lifted, out, false);
}

}  // namespace dirtile
