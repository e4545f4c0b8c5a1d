#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/field.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

struct DegenerationReport {
  int m = 0, r = 0, n = 0, p = 0, q = 0;
  std::string tau;
  /// Hilbert series of L(tau') for G(r,r,n).
  std::vector<std::int64_t> h1;
  /// Hilbert series of L(tau) for G(m,r,n), tau pulled back from tau'.
  std::vector<std::int64_t> h;
  /// h1(t^q) (1 + t + ... + t^{q-1})^n
  std::vector<std::int64_t> predicted;
  bool series_match = false;
  int lemma_checks = 0;
  int lemma_failures = 0;
  bool ok() const noexcept { return series_match && lemma_failures == 0; }
};

/// Field for G(r,r,n) sharing the encoding of f, with xi^q as its distinguished r-th root.
FiniteField quotient_root_field(const FiniteField& f, int q);

/// Copies coefficients of p into another field with the same element encoding.
Poly<FiniteField> rebase(const Poly<FiniteField>& p, const FiniteField& f);

/// Compares L(tau) for G(m,r,n) with L(tau') for G(r,r,n) and checks D_i(f'(x^q) v) = q x_i^{q-1} g(x^q),
/// g = D'_i(f' v), on `spot_checks` random homogeneous f' of degree at most max_degree.
DegenerationReport verify_degeneration(int m, int r, int n, const std::string& tau, std::uint32_t p,
                                       std::uint64_t seed = 1, int spot_checks = 20, int max_degree = 3);

void to_json(nlohmann::json& j, const DegenerationReport& r);

}  // namespace cherednik
