#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cherednik {

/// Polynomial in t with integer coefficients, little-endian.
struct IntPoly {
  std::vector<std::int64_t> c;

  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> init) : c(init) { trim(); }
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c(std::move(coeffs)) { trim(); }

  static IntPoly monomial(int degree, std::int64_t coeff = 1);
  /// 1 + t + ... + t^{k-1}
  static IntPoly geometric(int k);

  void trim();
  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  std::int64_t operator[](std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }
  std::int64_t eval_at_one() const;

  IntPoly substitute_power(int q) const;  // t -> t^q
  IntPoly truncated(int n) const;         // drop degrees > n

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

  IntPoly pow(int k) const;
  std::string to_string(const std::string& var = "t") const;
};

/// Closed form numerator / prod_i (1 - t^{e_i}).
struct RationalSeries {
  IntPoly numerator;
  std::vector<int> denominator;
};

/// Truncated power series a_0..a_N with an optional closed form.
struct GradedSeries {
  std::vector<std::int64_t> coeffs;
  std::optional<RationalSeries> closed;

  int bound() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t operator[](std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }
  /// Largest degree with a nonzero coefficient, or -1.
  int top_degree() const;
  std::int64_t total() const;
  IntPoly as_poly() const { return IntPoly(coeffs); }
};

/// numerator / prod (1 - t^{e_i}) expanded to degree N.
GradedSeries expand_rational(const IntPoly& numerator, const std::vector<int>& denominator_exponents, int N);

/// Coefficients of a finite polynomial padded with zeros to degree N.
std::vector<std::int64_t> pad_series(const IntPoly& p, int N);

void to_json(nlohmann::json& j, const IntPoly& p);
void to_json(nlohmann::json& j, const GradedSeries& s);

}  // namespace cherednik
