#include "cherednik/series.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cherednik {

IntPoly IntPoly::monomial(int degree, std::int64_t coeff) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = coeff;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::geometric(int k) { return IntPoly(std::vector<std::int64_t>(k, 1)); }

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::int64_t IntPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto x : c) s += x;
  return s;
}

IntPoly IntPoly::substitute_power(int q) const {
  if (c.empty()) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree()) * q + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) v[i * q] = c[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::truncated(int n) const {
  std::vector<std::int64_t> v(c.begin(), c.begin() + std::min<std::size_t>(c.size(), n + 1));
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> v(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> v(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(int k) const {
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t a = c[i];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = a < 0 ? -a : a;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

int GradedSeries::top_degree() const {
  for (int d = bound(); d >= 0; --d)
    if (coeffs[d] != 0) return d;
  return -1;
}

std::int64_t GradedSeries::total() const {
  std::int64_t s = 0;
  for (auto x : coeffs) s += x;
  return s;
}

GradedSeries expand_rational(const IntPoly& numerator, const std::vector<int>& denominator_exponents, int N) {
  std::vector<std::int64_t> a(N + 1, 0);
  for (int i = 0; i <= N; ++i) a[i] = numerator[i];
  for (int e : denominator_exponents) {
    if (e <= 0) continue;
    for (int i = e; i <= N; ++i) a[i] += a[i - e];
  }
  GradedSeries s;
  s.coeffs = std::move(a);
  s.closed = RationalSeries{numerator, denominator_exponents};
  return s;
}

std::vector<std::int64_t> pad_series(const IntPoly& p, int N) {
  std::vector<std::int64_t> v(N + 1, 0);
  for (int i = 0; i <= N; ++i) v[i] = p[i];
  return v;
}

void to_json(nlohmann::json& j, const IntPoly& p) { j = p.c; }

void to_json(nlohmann::json& j, const GradedSeries& s) {
  j = nlohmann::json{{"coefficients", s.coeffs}};
  if (s.closed) j["closedForm"] = {{"numerator", s.closed->numerator.c}, {"denominator", s.closed->denominator}};
}

}  // namespace cherednik
