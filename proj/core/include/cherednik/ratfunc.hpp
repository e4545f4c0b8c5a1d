#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cherednik/field.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

using MPoly = Poly<FiniteField>;

/// Greatest common divisor over F_q, normalized to leading coefficient 1.
MPoly poly_gcd(const MPoly& a, const MPoly& b);

/// A fraction num/den of polynomials over F_q in the parameter variables.
struct RatFunc {
  MPoly num;
  MPoly den;
};

/// The field F_q(c_1, ..., c_k) for k <= 3 parameter variables. Every element
/// is stored in canonical form: gcd(num, den) = 1 and den has leading coefficient 1,
/// so equality is structural.
class RationalFunctionField {
 public:
  using Elem = RatFunc;
  using Base = FiniteField;

  RationalFunctionField(FiniteField base, std::vector<std::string> names);

  const FiniteField& base() const noexcept { return base_; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  int nparams() const noexcept { return static_cast<int>(names_->size()); }
  std::uint32_t characteristic() const noexcept { return base_.characteristic(); }

  bool same_field(const RationalFunctionField& o) const noexcept {
    return base_.same_field(o.base_) && *names_ == *o.names_;
  }

  Elem zero() const;
  Elem one() const;
  Elem param(int i) const;
  Elem from_int(std::int64_t v) const;
  Elem from_base(FiniteField::Elem a) const;
  Elem make(MPoly num, MPoly den) const;

  bool is_zero(const Elem& a) const noexcept { return a.num.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a.num == b.num && a.den == b.den; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const;

  /// Evaluates at the given parameter values; throws DenominatorVanishesAtSpecialization.
  FiniteField::Elem specialize(const Elem& a, const std::vector<FiniteField::Elem>& values) const;

  /// Nonzero pseudo-random parameter values drawn deterministically from seed.
  std::vector<FiniteField::Elem> draw_values(std::uint64_t seed) const;

 private:
  Elem normalize(MPoly num, MPoly den) const;

  FiniteField base_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace cherednik
