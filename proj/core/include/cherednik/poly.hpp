#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/monomial.hpp"

namespace cherednik {

/// Sparse multivariate polynomial over a field context F.
/// Terms are kept in descending grlex order without zero coefficients.
template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<Monomial, Elem, GrlexDescending>;

  Poly(F field, int nvars) : f_(std::move(field)), n_(nvars) {}

  static Poly constant(const F& f, int n, const Elem& c) {
    Poly p(f, n);
    p.add_term(Monomial::one(), c);
    return p;
  }
  static Poly variable(const F& f, int n, int i) {
    Poly p(f, n);
    p.add_term(Monomial::var(i), f.one());
    return p;
  }
  static Poly monomial(const F& f, int n, const Monomial& m, const Elem& c) {
    Poly p(f, n);
    p.add_term(m, c);
    return p;
  }

  const F& field() const noexcept { return f_; }
  int nvars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  std::size_t size() const noexcept { return t_.size(); }

  int degree() const noexcept { return t_.empty() ? -1 : t_.begin()->first.degree(); }
  int low_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : t_) d = (d < 0 || m.degree() < d) ? m.degree() : d;
    return d;
  }
  bool is_homogeneous() const noexcept { return t_.empty() || degree() == low_degree(); }

  const Monomial& leading_monomial() const { return t_.begin()->first; }
  const Elem& leading_coefficient() const { return t_.begin()->second; }

  Elem coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? f_.zero() : it->second;
  }

  void add_term(const Monomial& m, const Elem& c) {
    if (f_.is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second = f_.add(it->second, c);
      if (f_.is_zero(it->second)) t_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, f_.neg(c));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const { return scaled(f_.neg(f_.one())); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.f_, a.n_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, a.f_.mul(ca, cb));
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Elem& c) const {
    Poly r(f_, n_);
    if (f_.is_zero(c)) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, f_.mul(x, c));
    return r;
  }
  Poly times_monomial(const Monomial& u, const Elem& c) const {
    Poly r(f_, n_);
    if (f_.is_zero(c)) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m * u, f_.mul(x, c));
    return r;
  }

  Poly pow(int k) const {
    Poly r = constant(f_, n_, f_.one());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ib = b.t_.begin();
    for (const auto& [m, c] : a.t_) {
      if (!(m == ib->first) || !a.f_.eq(c, ib->second)) return false;
      ++ib;
    }
    return true;
  }

  Poly derivative(int i) const {
    Poly r(f_, n_);
    for (const auto& [m, c] : t_) {
      if (m.e[i] == 0) continue;
      Monomial d = m;
      d.e[i] -= 1;
      r.add_term(d, f_.mul(c, f_.from_int(m.e[i])));
    }
    return r;
  }

  Poly homogeneous_part(int d) const {
    Poly r(f_, n_);
    for (const auto& [m, c] : t_)
      if (m.degree() == d) r.t_.emplace(m, c);
    return r;
  }

  /// x_j -> x_j^q for every variable.
  Poly substitute_powers(int q) const {
    Poly r(f_, n_);
    for (const auto& [m, c] : t_) {
      Monomial u;
      for (int i = 0; i < kMaxVars; ++i) u.e[i] = static_cast<std::uint8_t>(m.e[i] * q);
      r.t_.emplace(u, c);
    }
    return r;
  }

  Elem evaluate(const std::vector<Elem>& x) const {
    Elem s = f_.zero();
    for (const auto& [m, c] : t_) {
      Elem v = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < m.e[i]; ++k) v = f_.mul(v, x[i]);
      s = f_.add(s, v);
    }
    return s;
  }

  /// Exact quotient this / b, or nullopt when b does not divide.
  std::optional<Poly> divide_exact(const Poly& b) const {
    require(!b.is_zero(), ErrorCode::ZeroDenominator, "division by zero polynomial");
    Poly rem = *this;
    Poly quo(f_, n_);
    const Monomial& lb = b.leading_monomial();
    const Elem lbinv = f_.inv(b.leading_coefficient());
    while (!rem.is_zero()) {
      const Monomial lr = rem.leading_monomial();
      if (!lb.divides(lr)) return std::nullopt;
      const Monomial u = lb.cofactor(lr);
      const Elem c = f_.mul(rem.leading_coefficient(), lbinv);
      quo.add_term(u, c);
      rem -= b.times_monomial(u, c);
    }
    return quo;
  }

  std::string to_string(const std::vector<std::string>* names = nullptr) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
      if (!out.empty()) out += " + ";
      const bool unit = f_.eq(c, f_.one());
      const std::string ms = m.to_string(n_, names);
      if (m.degree() == 0) {
        out += f_.to_string(c);
      } else if (unit) {
        out += ms;
      } else {
        out += f_.to_string(c) + "*" + ms;
      }
    }
    return out;
  }

 private:
  F f_;
  int n_;
  Terms t_;
};

}  // namespace cherednik
