#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/field.hpp"
#include "cherednik/groebner.hpp"
#include "cherednik/monomial.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/series.hpp"
#include "cherednik/tableau.hpp"

namespace cherednik {

enum class ArrangementKind { I, T, JPDividesN, JPNotDividesN };

std::string to_string(ArrangementKind kind);

template <class F>
struct ArrangementIdeal {
  ArrangementKind kind = ArrangementKind::I;
  int n = 0;
  int i = 0;
  int m = 1;
  std::vector<Poly<F>> generators;
  /// Extra generators that are only conjectured to belong to the answer.
  std::vector<Poly<F>> conjectural;
  std::optional<RationalSeries> oracle;
  std::optional<int> oracle_top_degree;
  std::optional<std::int64_t> oracle_socle_dim;

  std::optional<GradedSeries> oracle_series(int N) const {
    if (!oracle) return std::nullopt;
    return expand_rational(oracle->numerator, oracle->denominator, N);
  }
  std::vector<std::int64_t> hilbert(int N) const {
    require(!generators.empty(), ErrorCode::UnsupportedCase, "ideal has no generators");
    return quotient_hilbert(generators.front().field(), n, generators, N);
  }
};

/// Numerator of the Hilbert series of A / I_i over (1-t)^{i+1}, before any power substitution.
IntPoly arrangement_numerator(int i, int n);

/// Squarefree monomials of degree d in n variables.
template <class F>
std::vector<Poly<F>> squarefree_monomials(const F& f, int n, int d) {
  std::vector<Poly<F>> out;
  if (d < 0 || d > n) return out;
  std::vector<int> pick(d);
  for (int k = 0; k < d; ++k) pick[k] = k;
  while (true) {
    Monomial mon;
    for (int v : pick) mon = mon * Monomial::var(v);
    out.push_back(Poly<F>::monomial(f, n, mon, f.one()));
    int k = d - 1;
    while (k >= 0 && pick[k] == n - d + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int l = k + 1; l < d; ++l) pick[l] = pick[l - 1] + 1;
  }
  return out;
}

/// e_1(x^m), ..., e_n(x^m).
template <class F>
std::vector<Poly<F>> elementary_symmetric_powers(const F& f, int n, int m) {
  std::vector<Poly<F>> out;
  for (int d = 1; d <= n; ++d) {
    Poly<F> e(f, n);
    for (const auto& mono : squarefree_monomials(f, n, d)) e += mono;
    out.push_back(e.substitute_powers(m));
  }
  return out;
}

template <class F>
ArrangementIdeal<F> power_substitute(const ArrangementIdeal<F>& ideal, int m) {
  require(m >= 1, ErrorCode::InvalidParameters, "power must be positive");
  ArrangementIdeal<F> out = ideal;
  out.m = ideal.m * m;
  out.generators.clear();
  out.conjectural.clear();
  for (const auto& g : ideal.generators) out.generators.push_back(g.substitute_powers(m));
  for (const auto& g : ideal.conjectural) out.conjectural.push_back(g.substitute_powers(m));
  if (ideal.oracle) {
    RationalSeries r = *ideal.oracle;
    for (int e : r.denominator)
      require(e == 1, ErrorCode::UnsupportedCase, "power substitution needs a (1-t)^d denominator");
    const int d = static_cast<int>(r.denominator.size());
    r.numerator = r.numerator.substitute_power(m) * IntPoly::geometric(m).pow(ideal.n - d);
    out.oracle = r;
  }
  out.oracle_top_degree.reset();
  return out;
}

/// Garnir generators of the ideal of the i-th arrangement, shape (n-i-1, i+1) when n >= 2i+2 and (i, i, 1) when
/// n = 2i+1, with x_j replaced by x_j^m. Requires 2i < n.
template <class F>
ArrangementIdeal<F> ideal_I(const F& f, int i, int m, int n) {
  require(i >= 0 && 2 * i < n && m >= 1, ErrorCode::OutOfRegime, "ideal_I needs 0 <= 2i < n");
  require(n >= 2 * i + 2 || i >= 1, ErrorCode::OutOfRegime, "the arrangement is the whole space");
  const Partition shape = n >= 2 * i + 2 ? Partition{n - i - 1, i + 1} : Partition{i, i, 1};
  ArrangementIdeal<F> I;
  I.kind = ArrangementKind::I;
  I.n = n;
  I.i = i;
  I.m = 1;
  for (const auto& t : standard_tableaux(shape)) I.generators.push_back(garnir_polynomial(f, n, t));
  I.oracle = RationalSeries{arrangement_numerator(i, n), std::vector<int>(i + 1, 1)};
  return m == 1 ? I : power_substitute(I, m);
}

/// Squarefree monomials of degree i.
template <class F>
ArrangementIdeal<F> ideal_T(const F& f, int i, int n) {
  require(i >= 1 && i <= n, ErrorCode::OutOfRegime, "ideal_T needs 1 <= i <= n");
  ArrangementIdeal<F> T;
  T.kind = ArrangementKind::T;
  T.n = n;
  T.i = i;
  T.generators = squarefree_monomials(f, n, i);
  IntPoly num;
  for (int j = 0; j < i; ++j) num = num + IntPoly::monomial(j, static_cast<std::int64_t>(binomial(n - i + j, n - i)));
  T.oracle = RationalSeries{num, std::vector<int>(i - 1, 1)};
  return T;
}

/// Candidate generators of J for the trivial representation of G(m,m,n) in characteristic p.
/// p | n: differences of m-th powers and squarefree monomials of degree p.
/// n = i mod p with 0 < i < p: e_k(x^m) and squarefree monomials of degree i.
/// For m = 1 the second case returns the generators of I_i with the regular sequence candidates as conjectural.
template <class F>
ArrangementIdeal<F> conjectured_J_generators(const F& f, int m, int n, int p) {
  require(m >= 1 && n >= 2 && p >= 2, ErrorCode::InvalidParameters, "need m >= 1, n >= 2, p prime");
  require(m % p != 0, ErrorCode::CharacteristicDividesM, "p divides m");
  ArrangementIdeal<F> J;
  J.n = n;
  J.m = m;
  if (n % p == 0) {
    J.kind = ArrangementKind::JPDividesN;
    J.i = 0;
    for (int k = 0; k + 1 < n; ++k)
      J.generators.push_back((Poly<F>::variable(f, n, k) - Poly<F>::variable(f, n, k + 1)).substitute_powers(m));
    for (auto& g : squarefree_monomials(f, n, p)) J.generators.push_back(std::move(g));
    J.oracle_top_degree = (p - 1) * m;
    return J;
  }
  const int i = n % p;
  J.kind = ArrangementKind::JPNotDividesN;
  J.i = i;
  if (m == 1) {
    if (2 * i < n) J = ideal_I(f, i, 1, n);
    J.kind = ArrangementKind::JPNotDividesN;
    J.oracle.reset();
    Poly<F> e1(f, n);
    for (int k = 0; k < n; ++k) e1 += Poly<F>::variable(f, n, k);
    J.conjectural.push_back(e1);
    if (n % p == 1) {
      const auto a = Poly<F>::variable(f, n, n - 2), b = Poly<F>::variable(f, n, n - 1);
      J.conjectural.push_back(a.pow(p) - a * b.pow(p - 1) + b.pow(p));
    }
    return J;
  }
  J.generators = elementary_symmetric_powers(f, n, m);
  for (auto& g : squarefree_monomials(f, n, i)) J.generators.push_back(std::move(g));
  IntPoly num;
  for (int j = 0; j < i; ++j) num = num + IntPoly::monomial(j, static_cast<std::int64_t>(binomial(n - i + j, n - i)));
  for (int j = 1; j < i; ++j) num = num * IntPoly::geometric(j * m);
  J.oracle = RationalSeries{num, {}};
  J.oracle_top_degree = m * i * (i - 1) / 2;
  J.oracle_socle_dim = static_cast<std::int64_t>(binomial(n - 1, i - 1));
  return J;
}

struct DunklKillReport {
  int m = 0, n = 0, p = 0, i = 0;
  bool congruence_holds = false;
  std::size_t generators = 0;
  std::size_t nonzero_images = 0;
  /// First nonzero D_j g found, printed.
  std::string witness;
  bool killed() const noexcept { return nonzero_images == 0; }
};

/// Applies every Dunkl operator of G(m,1,n) (generic parameters, hbar = 0) to every generator of I_i^{(m)}.
/// Throws CongruenceViolated unless n = i mod p, or allow_violation is set (then the residual is reported).
DunklKillReport verify_dunkl_kill(int m, int n, int p, int i, std::uint64_t seed = 1, bool allow_violation = false);

void to_json(nlohmann::json& j, const DunklKillReport& r);

}  // namespace cherednik
