#include "cherednik/ratfunc.hpp"

#include <random>

namespace cherednik {

namespace {

using Univ = std::vector<MPoly>;

unsigned var_mask(const MPoly& p) {
  unsigned mask = 0;
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < p.nvars(); ++i)
      if (m.e[i] != 0) mask |= 1u << i;
  return mask;
}

MPoly make_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.field().inv(p.leading_coefficient()));
}

Univ to_univ(const MPoly& p, int v) {
  Univ out;
  for (const auto& [m, c] : p.terms()) {
    const int k = m.e[v];
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1, MPoly(p.field(), p.nvars()));
    Monomial r = m;
    r.e[v] = 0;
    out[k].add_term(r, c);
  }
  return out;
}

MPoly from_univ(const Univ& u, int v, const FiniteField& f, int n) {
  MPoly out(f, n);
  for (std::size_t k = 0; k < u.size(); ++k) out += u[k].times_monomial(Monomial::var(v, static_cast<int>(k)), f.one());
  return out;
}

void trim(Univ& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

MPoly content(const Univ& u, const FiniteField& f, int n) {
  MPoly g(f, n);
  for (const auto& c : u) {
    g = poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Univ divide_coeffs(const Univ& u, const MPoly& c) {
  Univ out;
  out.reserve(u.size());
  for (const auto& x : u) {
    auto q = x.divide_exact(c);
    require(q.has_value(), ErrorCode::DivisionFailure, "content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

Univ pseudo_remainder(Univ a, const Univ& b) {
  const std::size_t db = b.size() - 1;
  const MPoly& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const MPoly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x = x * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  const FiniteField& f = a.field();
  const int n = a.nvars();
  const unsigned ma = var_mask(a), mb = var_mask(b);
  if ((ma | mb) == 0) return MPoly::constant(f, n, f.one());
  int v = 0;
  while (!(((ma | mb) >> v) & 1u)) ++v;
  if (!((ma >> v) & 1u)) return poly_gcd(a, content(to_univ(b, v), f, n));
  if (!((mb >> v) & 1u)) return poly_gcd(b, content(to_univ(a, v), f, n));

  Univ A = to_univ(a, v), B = to_univ(b, v);
  const MPoly ca = content(A, f, n), cb = content(B, f, n);
  const MPoly c = poly_gcd(ca, cb);
  A = divide_coeffs(A, ca);
  B = divide_coeffs(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  Univ G;
  while (true) {
    Univ R = pseudo_remainder(A, B);
    if (R.empty()) {
      G = B;
      break;
    }
    if (R.size() == 1) {
      G = {MPoly::constant(f, n, f.one())};
      break;
    }
    A = std::move(B);
    B = divide_coeffs(R, content(R, f, n));
  }
  G = divide_coeffs(G, content(G, f, n));
  return make_monic(c * from_univ(G, v, f, n));
}

RationalFunctionField::RationalFunctionField(FiniteField base, std::vector<std::string> names)
    : base_(std::move(base)), names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  require(names_->size() <= 3, ErrorCode::InvalidParameters, "symbolic mode supports at most 3 parameters");
}

RationalFunctionField::Elem RationalFunctionField::normalize(MPoly num, MPoly den) const {
  require(!den.is_zero(), ErrorCode::ZeroDenominator, "zero denominator");
  if (num.is_zero()) return zero();
  const MPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = *num.divide_exact(g);
    den = *den.divide_exact(g);
  }
  const auto lc = base_.inv(den.leading_coefficient());
  return {num.scaled(lc), den.scaled(lc)};
}

RationalFunctionField::Elem RationalFunctionField::zero() const {
  return {MPoly(base_, nparams()), MPoly::constant(base_, nparams(), base_.one())};
}

RationalFunctionField::Elem RationalFunctionField::one() const { return from_base(base_.one()); }

RationalFunctionField::Elem RationalFunctionField::param(int i) const {
  return {MPoly::variable(base_, nparams(), i), MPoly::constant(base_, nparams(), base_.one())};
}

RationalFunctionField::Elem RationalFunctionField::from_int(std::int64_t v) const { return from_base(base_.from_int(v)); }

RationalFunctionField::Elem RationalFunctionField::from_base(FiniteField::Elem a) const {
  return {MPoly::constant(base_, nparams(), a), MPoly::constant(base_, nparams(), base_.one())};
}

RationalFunctionField::Elem RationalFunctionField::make(MPoly num, MPoly den) const {
  return normalize(std::move(num), std::move(den));
}

RationalFunctionField::Elem RationalFunctionField::add(const Elem& a, const Elem& b) const {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (a.den == b.den) return normalize(a.num + b.num, a.den);
  return normalize(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunctionField::Elem RationalFunctionField::neg(const Elem& a) const { return {-a.num, a.den}; }

RationalFunctionField::Elem RationalFunctionField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

RationalFunctionField::Elem RationalFunctionField::mul(const Elem& a, const Elem& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  if (a.den.degree() == 0 && b.den.degree() == 0 && (a.num.degree() == 0 || b.num.degree() == 0))
    return {a.num * b.num, MPoly::constant(base_, nparams(), base_.one())};
  return normalize(a.num * b.num, a.den * b.den);
}

RationalFunctionField::Elem RationalFunctionField::inv(const Elem& a) const {
  require(!is_zero(a), ErrorCode::ZeroDenominator, "inverse of zero");
  return normalize(a.den, a.num);
}

std::string RationalFunctionField::to_string(const Elem& a) const {
  const std::string n = a.num.to_string(names_.get());
  if (a.den.degree() == 0) return a.num.size() > 1 ? "(" + n + ")" : n;
  return "(" + n + ")/(" + a.den.to_string(names_.get()) + ")";
}

FiniteField::Elem RationalFunctionField::specialize(const Elem& a, const std::vector<FiniteField::Elem>& values) const {
  require(static_cast<int>(values.size()) == nparams(), ErrorCode::InvalidParameters, "wrong number of values");
  const auto den = a.den.evaluate(values);
  require(!base_.is_zero(den), ErrorCode::DenominatorVanishesAtSpecialization,
          "denominator " + a.den.to_string(names_.get()) + " vanishes");
  return base_.div(a.num.evaluate(values), den);
}

std::vector<FiniteField::Elem> RationalFunctionField::draw_values(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1, base_.size() - 1);
  std::vector<FiniteField::Elem> v(nparams());
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace cherednik
