#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cherednik {

/// Parameters of a finite field F_{p^k} together with a distinguished
/// primitive m-th root of unity. Coefficient lists are little-endian.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;  // monic, degree k
  std::uint32_t m = 1;
  std::vector<std::uint32_t> xi;       // k coefficients
  std::uint64_t seed = 0;              // seed used by the modulus search

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

void to_json(nlohmann::json& j, const FieldSpec& spec);
void from_json(const nlohmann::json& j, FieldSpec& spec);

bool is_prime(std::uint64_t n);

/// Smallest k with m | p^k - 1.
std::uint32_t multiplicative_order(std::uint64_t p, std::uint64_t m);

/// Builds F_{p^k} for the minimal k containing primitive m-th roots of unity.
/// Throws NotPrime or CharacteristicDividesM.
/// The extension degree is the least multiple of ord_m(p) with p^k >= min_size.
FieldSpec build_field(std::uint32_t p, std::uint32_t m, std::uint64_t seed = 1, std::uint64_t min_size = 0);

/// Field size used when generic parameters are specialized to random values.
inline constexpr std::uint64_t kGenericFieldSize = 1u << 11;

/// Dense univariate irreducibility test over F_p (gcd(x^{p^i} - x, f) = 1, i <= deg/2).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Arithmetic context for F_{p^k}. Elements are encoded as integers
/// sum c_i p^i in [0, p^k). Copies share the same lookup tables.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  explicit FiniteField(FieldSpec spec);

  /// The prime field F_p (m = 1, xi = 1).
  static FiniteField prime(std::uint32_t p);
  /// Shorthand for FiniteField(build_field(p, m)).
  static FiniteField with_roots(std::uint32_t p, std::uint32_t m, std::uint64_t seed = 1, std::uint64_t min_size = 0);

  const FieldSpec& spec() const noexcept { return t_->spec; }
  std::uint32_t characteristic() const noexcept { return t_->spec.p; }
  std::uint32_t degree() const noexcept { return t_->spec.k; }
  std::uint32_t size() const noexcept { return t_->q; }
  std::uint32_t root_order() const noexcept { return t_->spec.m; }

  bool same_field(const FiniteField& other) const noexcept {
    return t_ == other.t_ || t_->spec == other.t_->spec;
  }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  bool eq(Elem a, Elem b) const noexcept { return a == b; }

  Elem add(Elem a, Elem b) const noexcept {
    if (prime_) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (prime_) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (prime_) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_base(Elem a) const noexcept { return a; }

  /// xi^k for the distinguished primitive m-th root xi.
  Elem xi_pow(std::int64_t k) const noexcept;
  Elem xi() const noexcept { return t_->xi; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// Prime fields print as an integer, extension elements as a polynomial in `a`.
  std::string to_string(Elem a) const;

  /// dst += c * src
  void axpy(std::span<Elem> dst, std::span<const Elem> src, Elem c) const noexcept;
  void scale(std::span<Elem> v, Elem c) const noexcept;

 private:
  struct Tables {
    FieldSpec spec;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> exp;   // length 2(q-1)
    std::vector<std::uint32_t> log;   // length q, log[0] unused
    std::vector<std::int64_t> zech;   // log(1 + g^i), -1 when 1 + g^i = 0
    std::vector<std::uint32_t> negate;
    Elem xi = 1;
  };

  Elem add_ext(Elem a, Elem b) const noexcept;
  Elem neg_ext(Elem a) const noexcept { return t_->negate[a]; }

  std::shared_ptr<const Tables> t_;
  std::uint32_t p_ = 2;
  bool prime_ = true;
};

}  // namespace cherednik
