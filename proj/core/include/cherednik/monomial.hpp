#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace cherednik {

inline constexpr int kMaxVars = 8;

/// Exponent vector in at most eight variables, packed one byte per exponent.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  static Monomial one() { return {}; }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    return m;
  }

  int degree() const noexcept {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  std::uint64_t key() const noexcept {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxVars; ++i) k |= static_cast<std::uint64_t>(e[i]) << (8 * i);
    return k;
  }
  int operator[](int i) const noexcept { return e[i]; }

  Monomial operator*(const Monomial& o) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    return r;
  }
  bool divides(const Monomial& o) const noexcept {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  /// o / this, assuming divides(o).
  Monomial cofactor(const Monomial& o) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
    return r;
  }
  Monomial lcm(const Monomial& o) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(e[i], o.e[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e == b.e; }
  std::string to_string(int nvars, const std::vector<std::string>* names = nullptr) const;
};

/// Graded lexicographic order with x_1 > x_2 > ... ; returns true when a > b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t k = m.key();
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

/// All monomials of one degree in n variables, listed in descending grlex order.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(int nvars, int degree);

  int nvars() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return list_.size(); }
  const Monomial& operator[](std::size_t i) const noexcept { return list_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return list_; }

  /// Index of a monomial of this degree, or -1.
  long index(const Monomial& m) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Monomial> list_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Number of monomials of degree d in n variables.
inline std::uint64_t monomial_count(int n, int d) { return d < 0 ? 0 : binomial(n + d - 1, d); }

}  // namespace cherednik
