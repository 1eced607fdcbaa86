#include "dirtile/dihedral.hpp"

#include <bit>
#include <cctype>

#include "dirtile/errors.hpp"

namespace dirtile {

void check_sides(int m) {
  if (m < 3 || m > kMaxSides)
    throw DomainError("m must lie in [3, " + std::to_string(kMaxSides) + "], got " + std::to_string(m));
}

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

std::uint32_t low_bits(int m) { return m >= 32 ? ~0u : ((1u << m) - 1u); }

}  // namespace

SignCode::SignCode(int m) : m_(m) {
  if (m < 1 || m > kMaxSides) throw DomainError("code length out of range: " + std::to_string(m));
}

SignCode::SignCode(std::initializer_list<int> entries) {
  *this = from_entries(std::span<const int>(entries.begin(), entries.size()));
}

SignCode SignCode::from_entries(std::span<const int> entries) {
  SignCode c(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == -1)
      c.neg_ |= 1u << i;
    else if (entries[i] != 1)
      throw DomainError("code entries must be +1 or -1");
  }
  return c;
}

SignCode SignCode::from_mask(int m, std::uint32_t negatives) {
  SignCode c(m);
  if (negatives & ~low_bits(m)) throw DomainError("mask has bits beyond m");
  c.neg_ = negatives;
  return c;
}

SignCode SignCode::all_minus(int m) { return from_mask(m, low_bits(m)); }

SignCode SignCode::parse(std::string_view text) {
  std::vector<int> v;
  bool tuple = text.find('1') != std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (tuple) {
      if (ch == '1') {
        bool negative = i > 0 && text[i - 1] == '-';
        v.push_back(negative ? -1 : 1);
      } else if (ch != '-' && ch != '+' && ch != ',' && ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) {
        throw DomainError("bad code: " + std::string(text));
      }
    } else if (ch == '+') {
      v.push_back(1);
    } else if (ch == '-') {
      v.push_back(-1);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw DomainError("bad code: " + std::string(text));
    }
  }
  if (v.empty()) throw DomainError("empty code");
  return from_entries(v);
}

int SignCode::at(int i) const {
  if (i < 1 || i > m_) throw DomainError("code index out of range");
  return (*this)[i - 1];
}

std::vector<int> SignCode::entries() const {
  std::vector<int> v(m_);
  for (int i = 0; i < m_; ++i) v[i] = (*this)[i];
  return v;
}

SignCode SignCode::operator*(const SignCode& other) const {
  if (m_ != other.m_) throw DimensionError("codes of length " + std::to_string(m_) + " and " + std::to_string(other.m_));
  SignCode c = *this;
  c.neg_ ^= other.neg_;
  return c;
}

SignCode SignCode::operator-() const {
  SignCode c = *this;
  c.neg_ ^= low_bits(m_);
  return c;
}

std::string SignCode::str() const {
  std::string s(m_, '+');
  for (int i = 0; i < m_; ++i)
    if ((*this)[i] < 0) s[i] = '-';
  return s;
}

std::string SignCode::tuple() const {
  std::string s = "(";
  for (int i = 0; i < m_; ++i) {
    if (i) s += ',';
    s += (*this)[i] < 0 ? "-1" : "1";
  }
  return s + ")";
}

std::strong_ordering operator<=>(const SignCode& a, const SignCode& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  std::uint32_t diff = a.neg_ ^ b.neg_;
  if (!diff) return std::strong_ordering::equal;
  int i = std::countr_zero(diff);
  return ((a.neg_ >> i) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
}

DihedralElement::DihedralElement(int m, int rot, bool flip) : m_(m), rot_(0), flip_(flip) {
  check_sides(m);
  rot_ = mod(rot, m);
}

DihedralElement DihedralElement::from_index(int m, int index) {
  check_sides(m);
  if (index < 0 || index >= 2 * m) throw DomainError("element index out of range");
  return {m, index % m, index >= m};
}

DihedralElement DihedralElement::parse(int m, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "e") return identity(m);
  if (s.empty()) throw DomainError("empty element name");
  std::size_t i = 0;
  bool flip = false;
  if (s[i] == 'f') {
    flip = true;
    ++i;
  }
  long rot = 0;
  while (i < s.size()) {
    if (s[i] != 'r') throw DomainError("bad element name: " + std::string(text));
    ++i;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool negative = false;
      if (i < s.size() && s[i] == '-') {
        negative = true;
        ++i;
      }
      std::size_t start = i;
      long k = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) k = k * 10 + (s[i++] - '0');
      if (i == start || k > 100000) throw DomainError("bad exponent in: " + std::string(text));
      rot += negative ? -k : k;
    } else {
      rot += 1;
    }
  }
  return {m, static_cast<int>(mod(static_cast<int>(rot % m), m)), flip};
}

DihedralElement DihedralElement::inverse() const {
  if (flip_) return *this;
  return {m_, -rot_, false};
}

std::string DihedralElement::name() const {
  if (!flip_) return rot_ == 0 ? "e" : "r^" + std::to_string(rot_);
  return rot_ == 0 ? "f" : "f r^" + std::to_string(rot_);
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b) {
  if (a.m() != b.m()) throw DimensionError("elements of D_" + std::to_string(a.m()) + " and D_" + std::to_string(b.m()));
  int rot = (b.flip() ? -a.rot() : a.rot()) + b.rot();
  return {a.m(), rot, a.flip() != b.flip()};
}

SignCode act_on_code(const DihedralElement& sigma, const SignCode& delta) {
  int m = sigma.m();
  if (delta.size() != m) throw DimensionError("code length " + std::to_string(delta.size()) + " for D_" + std::to_string(m));
  std::uint32_t in = delta.negatives(), out = 0;
  for (int i = 0; i < m; ++i) {
    int src = sigma.flip() ? m - 1 - i : i;
    src = (src + sigma.rot()) % m;
    if ((in >> src) & 1u) out |= 1u << i;
  }
  if (sigma.flip()) out ^= low_bits(m);
  return SignCode::from_mask(m, out);
}

int act_on_index(const DihedralElement& sigma, int i) {
  int m = sigma.m();
  if (i < 1 || i > m) throw DomainError("index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  int j = mod(i - 1 + sigma.rot(), m) + 1;
  return sigma.flip() ? m + 1 - j : j;
}

int sign(const DihedralElement& sigma) { return sigma.flip() ? -1 : 1; }

DihedralElement conjugate(const DihedralElement& sigma, const DihedralElement& tau) {
  return compose(compose(sigma, tau), sigma.inverse());
}

DihedralElement mirror(const DihedralElement& sigma) { return {sigma.m(), -sigma.rot(), sigma.flip()}; }

SignCode transport_code(const DihedralElement& sigma, const SignCode& delta) {
  return act_on_code(mirror(sigma), delta);
}

std::vector<DihedralElement> all_elements(int m) {
  check_sides(m);
  std::vector<DihedralElement> v;
  v.reserve(2 * m);
  for (int k = 0; k < 2 * m; ++k) v.push_back(DihedralElement::from_index(m, k));
  return v;
}

ElementMask full_mask(int m) {
  check_sides(m);
  return 2 * m >= 64 ? ~ElementMask{0} : ((ElementMask{1} << (2 * m)) - 1);
}

ElementMask mask_of(std::span<const DihedralElement> elements) {
  ElementMask mask = 0;
  for (const auto& e : elements) {
    if (e.m() != elements.front().m()) throw DimensionError("mixed m in subset");
    mask |= ElementMask{1} << e.index();
  }
  return mask;
}

std::vector<DihedralElement> elements_of(int m, ElementMask mask) {
  std::vector<DihedralElement> v;
  for (int k = 0; k < 2 * m; ++k)
    if ((mask >> k) & 1) v.push_back(DihedralElement::from_index(m, k));
  return v;
}

ElementMask parse_subset(int m, std::string_view text) {
  ElementMask mask = 0;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char ch : token)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (!t.empty()) mask |= ElementMask{1} << DihedralElement::parse(m, token).index();
    token.clear();
  };
  for (char ch : text) {
    if (ch == '{' || ch == '}') continue;
    if (ch == ',')
      flush();
    else
      token += ch;
  }
  flush();
  return mask;
}

std::string format_subset(int m, ElementMask mask) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : elements_of(m, mask)) {
    if (!first) s += ", ";
    s += e.name();
    first = false;
  }
  return s + "}";
}

}  // namespace dirtile
