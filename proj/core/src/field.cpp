#include "cherednik/field.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <random>
#include <sstream>

#include "cherednik/error.hpp"

namespace cherednik {

namespace {

using UPoly = std::vector<std::uint32_t>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t quo = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - quo * nt);
    std::tie(r, nr) = std::make_pair(nr, r - quo * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b (b nonzero, trimmed).
UPoly upoly_mod(UPoly a, const UPoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t f = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = (f * b[i]) % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return upoly_mod(std::move(c), f, p);
}

UPoly upoly_powmod(UPoly base, std::uint64_t e, const UPoly& f, std::uint32_t p) {
  UPoly result{1};
  base = upoly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = upoly_mulmod(result, base, f, p);
    base = upoly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

UPoly upoly_gcd(UPoly a, UPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly decode(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
  UPoly c(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

std::uint32_t encode(const UPoly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t multiplicative_order(std::uint64_t p, std::uint64_t m) {
  if (m <= 1) return 1;
  std::uint64_t v = p % m;
  std::uint32_t k = 1;
  while (v != 1 % m) {
    v = (v * p) % m;
    ++k;
  }
  return k;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  UPoly f = monic;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  UPoly xpow{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xpow = upoly_powmod(xpow, p, f, p);
    UPoly h = xpow;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (upoly_gcd(f, h, p).size() > 1) return false;
  }
  return true;
}

namespace {

FieldSpec choose_spec(std::uint32_t p, std::uint32_t m, std::uint64_t seed, std::uint64_t min_size) {
  require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(m >= 1, ErrorCode::InvalidParameters, "root order must be positive");
  require(m % p != 0, ErrorCode::CharacteristicDividesM,
          "p=" + std::to_string(p) + " divides m=" + std::to_string(m));
  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  spec.seed = seed;
  spec.k = multiplicative_order(p, m);
  const std::uint32_t step = spec.k;
  while (ipow(p, spec.k) < min_size && ipow(p, spec.k + step) <= (1u << 24)) spec.k += step;
  if (spec.k == 1) {
    spec.modulus = {0, 1};
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    while (true) {
      UPoly f(spec.k + 1, 0);
      for (std::uint32_t i = 0; i < spec.k; ++i) f[i] = coeff(rng);
      f[spec.k] = 1;
      if (f[0] == 0) continue;
      if (is_irreducible_mod_p(f, p)) {
        spec.modulus = std::move(f);
        break;
      }
    }
  }
  return spec;
}

}  // namespace

FieldSpec build_field(std::uint32_t p, std::uint32_t m, std::uint64_t seed, std::uint64_t min_size) {
  return FiniteField(choose_spec(p, m, seed, min_size)).spec();
}

FiniteField::FiniteField(FieldSpec spec) {
  require(is_prime(spec.p), ErrorCode::NotPrime, std::to_string(spec.p) + " is not prime");
  require(spec.m >= 1 && spec.m % spec.p != 0, ErrorCode::CharacteristicDividesM, "invalid root order");
  if (spec.modulus.empty()) spec.modulus = spec.k == 1 ? UPoly{0, 1} : UPoly{};
  require(spec.modulus.size() == spec.k + 1 && spec.modulus.back() == 1, ErrorCode::InvalidParameters,
          "modulus must be monic of degree k");
  require(is_irreducible_mod_p(spec.modulus, spec.p), ErrorCode::InvalidParameters, "modulus is reducible");
  const std::uint64_t q64 = ipow(spec.p, spec.k);
  require(q64 <= (1u << 24), ErrorCode::InvalidParameters, "field too large for table arithmetic");
  require((q64 - 1) % spec.m == 0, ErrorCode::InvalidParameters, "field lacks primitive m-th roots of unity");

  auto t = std::make_shared<Tables>();
  const std::uint32_t p = spec.p, k = spec.k, q = static_cast<std::uint32_t>(q64);
  t->q = q;
  p_ = p;
  prime_ = (k == 1);

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (k == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    UPoly c = upoly_mulmod(decode(a, p, k), decode(b, p, k), spec.modulus, p);
    c.resize(k, 0);
    return encode(c, p);
  };

  const std::uint32_t n = q - 1;
  std::vector<std::uint32_t> primes;
  for (std::uint32_t x = n, d = 2; x > 1; ++d) {
    if (static_cast<std::uint64_t>(d) * d > x) d = x;
    if (x % d) continue;
    primes.push_back(d);
    while (x % d == 0) x /= d;
  }
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    for (; e; e >>= 1, a = slow_mul(a, a))
      if (e & 1) r = slow_mul(r, a);
    return r;
  };
  auto primitive = [&](std::uint32_t g) {
    if (g == 0) return false;
    for (std::uint32_t l : primes)
      if (slow_pow(g, n / l) == 1) return false;
    return true;
  };

  std::uint32_t gen = 0;
  for (std::uint32_t g = 1; g < q && !gen; ++g)
    if (primitive(g)) gen = g;
  require(gen != 0, ErrorCode::InvalidParameters, "no primitive element found");
  std::vector<std::uint32_t> pw(k + 1, 1);
  for (std::uint32_t i = 1; i <= k; ++i) pw[i] = pw[i - 1] * p;
  std::vector<std::uint64_t> gd(k), vd(k), prod(2 * k);
  std::vector<std::uint32_t> gnz;
  for (std::uint32_t i = 0; i < k; ++i) {
    gd[i] = (gen / pw[i]) % p;
    if (gd[i]) gnz.push_back(i);
  }
  auto times_gen = [&](std::uint32_t v) -> std::uint32_t {
    if (k == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * gen) % p);
    for (std::uint32_t i = 0; i < k; ++i) vd[i] = (v / pw[i]) % p;
    std::fill(prod.begin(), prod.end(), 0);
    for (std::uint32_t i = 0; i < k; ++i)
      if (vd[i])
        for (std::uint32_t j : gnz) prod[i + j] = (prod[i + j] + vd[i] * gd[j]) % p;
    for (std::uint32_t d = 2 * k - 1; d-- > k;) {
      const std::uint64_t top = prod[d];
      if (!top) continue;
      for (std::uint32_t i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + top * (p - spec.modulus[i])) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) out += static_cast<std::uint32_t>(prod[i]) * pw[i];
    return out;
  };

  t->exp.assign(2 * static_cast<std::size_t>(n), 0);
  t->log.assign(q, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->exp[i] = t->exp[i + n] = v;
    t->log[v] = i;
    v = times_gen(v);
  }

  auto digit_op = [&](std::uint32_t a, auto op) {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) out += op((a / pw[i]) % p) * pw[i];
    return out;
  };
  t->negate.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) t->negate[a] = digit_op(a, [p](std::uint32_t d) { return (p - d) % p; });
  t->zech.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t e = t->exp[i];
    const std::uint32_t s = (e % p == p - 1) ? e - (p - 1) : e + 1;
    t->zech[i] = s == 0 ? -1 : static_cast<std::int64_t>(t->log[s]);
  }

  auto order_of = [&](std::uint32_t a) -> std::uint64_t {
    return n / std::gcd<std::uint64_t, std::uint64_t>(t->log[a], n);
  };
  if (spec.xi.empty()) {
    for (std::uint32_t a = 1; a < q; ++a) {
      if (order_of(a) == spec.m) {
        t->xi = a;
        break;
      }
    }
    UPoly c = decode(t->xi, p, k);
    spec.xi = c;
  } else {
    require(spec.xi.size() == k, ErrorCode::InvalidParameters, "xi must have k coefficients");
    t->xi = encode(spec.xi, p);
    require(t->xi != 0 && order_of(t->xi) == spec.m, ErrorCode::InvalidParameters, "xi does not have order m");
  }
  t->spec = std::move(spec);
  t_ = std::move(t);
}

FiniteField FiniteField::prime(std::uint32_t p) { return FiniteField(choose_spec(p, 1, 1, 0)); }

FiniteField FiniteField::with_roots(std::uint32_t p, std::uint32_t m, std::uint64_t seed, std::uint64_t min_size) {
  return FiniteField(choose_spec(p, m, seed, min_size));
}

FiniteField::Elem FiniteField::add_ext(Elem a, Elem b) const noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = t_->q - 1;
  const std::uint32_t la = t_->log[a], lb = t_->log[b];
  const std::uint32_t d = lb >= la ? lb - la : lb + n - la;
  const std::int64_t z = t_->zech[d];
  if (z < 0) return 0;
  return t_->exp[la + static_cast<std::uint32_t>(z)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  require(a != 0, ErrorCode::ZeroDenominator, "inverse of zero");
  const std::uint32_t n = t_->q - 1;
  return t_->exp[(n - t_->log[a]) % n];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    require(e >= 0, ErrorCode::ZeroDenominator, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = t_->q - 1;
  std::int64_t r = (static_cast<std::int64_t>(t_->log[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return t_->exp[static_cast<std::size_t>(r)];
}

FiniteField::Elem FiniteField::xi_pow(std::int64_t k) const noexcept {
  const std::int64_t n = t_->q - 1;
  const std::int64_t m = t_->spec.m;
  std::int64_t kk = k % m;
  if (kk < 0) kk += m;
  return t_->exp[static_cast<std::size_t>((static_cast<std::int64_t>(t_->log[t_->xi]) * kk) % n)];
}

std::uint64_t FiniteField::order(Elem a) const {
  require(a != 0, ErrorCode::InvalidParameters, "order of zero");
  const std::uint64_t n = t_->q - 1;
  return n / std::gcd<std::uint64_t, std::uint64_t>(t_->log[a], n);
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const { return decode(a, p_, degree()); }

FiniteField::Elem FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  UPoly c(degree(), 0);
  for (std::size_t i = 0; i < coeffs.size() && i < c.size(); ++i) c[i] = coeffs[i] % p_;
  return encode(c, p_);
}

std::string FiniteField::to_string(Elem a) const {
  if (prime_) return std::to_string(a);
  const UPoly c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 'a';
      if (i > 1) os << '^' << i;
    }
  }
  return first ? "0" : "(" + os.str() + ")";
}

void FiniteField::axpy(std::span<Elem> dst, std::span<const Elem> src, Elem c) const noexcept {
  if (c == 0) return;
  if (prime_) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (src[i] != 0) dst[i] = static_cast<Elem>((dst[i] + cc * src[i]) % p_);
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (src[i] != 0) dst[i] = add_ext(dst[i], mul(c, src[i]));
}

void FiniteField::scale(std::span<Elem> v, Elem c) const noexcept {
  for (auto& x : v) x = mul(x, c);
}

void to_json(nlohmann::json& j, const FieldSpec& spec) {
  j = nlohmann::json{{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus},
                     {"m", spec.m}, {"xi", spec.xi}, {"seed", spec.seed}};
}

void from_json(const nlohmann::json& j, FieldSpec& spec) {
  spec.p = j.at("p").get<std::uint32_t>();
  spec.k = j.at("k").get<std::uint32_t>();
  spec.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  spec.m = j.at("m").get<std::uint32_t>();
  spec.xi = j.at("xi").get<std::vector<std::uint32_t>>();
  spec.seed = j.value("seed", std::uint64_t{0});
}

}  // namespace cherednik
