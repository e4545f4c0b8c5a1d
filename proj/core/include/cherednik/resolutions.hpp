#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/groebner.hpp"
#include "cherednik/lmodule.hpp"
#include "cherednik/rep_theory.hpp"
#include "cherednik/series.hpp"

namespace cherednik {

/// A finitely generated graded module over K[x_1..x_n], described by its graded pieces and the maps x_j.
template <class F>
struct GradedModuleView {
  F field;
  int nvars = 0;
  /// Pieces are available for degrees 0..known.
  int known = 0;
  /// The module is zero above `known`.
  bool finite = false;
  /// Every graded Betti number lives in internal degree <= tor_bound; -1 when unknown.
  int tor_bound = -1;
  std::function<std::size_t(int)> dim;
  std::function<Matrix<F>(int, int)> mul;
  std::function<Matrix<F>(const GroupElement&, int)> act;
};

template <class F>
GradedModuleView<F> module_view(const VermaQuotient<F>& N) {
  GradedModuleView<F> v{N.field(), N.engine().n()};
  v.finite = N.finite();
  v.known = N.bound();
  v.tor_bound = v.finite ? N.top_degree() + v.nvars : -1;
  v.dim = [&N](int d) { return N.qdim(d); };
  v.mul = [&N](int j, int d) { return N.mul_map(j, d); };
  v.act = [&N](const GroupElement& g, int d) { return N.group_map(g, d); };
  return v;
}

/// View of F/U through a Groebner basis; exact through degree dmax, or everywhere when the basis is complete.
template <class F>
GradedModuleView<F> module_view(const GroebnerQuotient<F>& Q, int dmax) {
  const auto& gb = Q.groebner();
  GradedModuleView<F> v{Q.field(), Q.nvars()};
  v.known = dmax;
  v.finite = false;
  if (gb.complete()) {
    int b = gb.lcm_degree_bound();
    for (int s : gb.order().shifts()) b = std::max(b, s);
    v.tor_bound = b;
    if (gb.quotient_finite()) {
      int top = 0;
      for (int k = 0; k < gb.order().rank(); ++k) {
        int deg = gb.order().shift(k);
        for (int i = 0; i < Q.nvars(); ++i) {
          int pure = 0;
          for (const auto& g : gb.basis())
            if (g.front().first.comp == k && g.front().first.mon.degree() == g.front().first.mon[i])
              pure = pure == 0 ? g.front().first.mon[i] : std::min(pure, static_cast<int>(g.front().first.mon[i]));
          deg += pure - 1;
        }
        top = std::max(top, deg);
      }
      v.finite = true;
      v.known = std::max(dmax, top);
    }
  }
  v.dim = [&Q](int d) { return Q.dim(d); };
  v.mul = [&Q](int j, int d) { return Q.mul_map(j, d); };
  return v;
}

/// Subsets of {0..n-1} of size i in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int i);

/// Matrix of g on the i-th exterior power of h* (basis x_S for S from subsets(n, i)).
Matrix<FiniteField> exterior_action(const FiniteField& f, const GroupElement& g, int i);

/// Graded Betti numbers beta_{ij} = dim Tor_i(M, K)_j.
struct BettiTable {
  int nvars = 0;
  int bound = 0;
  bool complete = false;
  std::map<std::pair<int, int>, std::int64_t> beta;

  std::int64_t operator()(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }
  std::vector<std::int64_t> ranks() const;
  int pdim() const;
  /// sum_i (-1)^i sum_j beta_ij t^j
  IntPoly alternating_sum() const;
  /// Rows j - i, columns i.
  std::string to_string() const;
};

void to_json(nlohmann::json& j, const BettiTable& t);

namespace detail {

template <class F>
Matrix<F> koszul_differential(const GradedModuleView<F>& M, int i, int j) {
  const int n = M.nvars;
  const auto src = subsets(n, i), dst = subsets(n, i - 1);
  const std::size_t a = M.dim(j - i), b = M.dim(j - i + 1);
  Matrix<F> D(M.field, dst.size() * b, src.size() * a);
  if (a == 0 || b == 0 || i == 0) return D;
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t k = 0; k < dst.size(); ++k) pos[dst[k]] = k;
  std::vector<Matrix<F>> mul;
  for (int v = 0; v < n; ++v) mul.push_back(M.mul(v, j - i));
  for (std::size_t s = 0; s < src.size(); ++s)
    for (int t = 0; t < i; ++t) {
      auto rest = src[s];
      const int var = rest[t];
      rest.erase(rest.begin() + t);
      const std::size_t r0 = pos.at(rest) * b, c0 = s * a;
      const bool neg = t % 2 == 1;
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < a; ++c) {
          const auto& x = mul[var](r, c);
          if (!M.field.is_zero(x)) D(r0 + r, c0 + c) = neg ? M.field.neg(x) : x;
        }
    }
  return D;
}

inline int betti_limit(int known, int tor_bound, bool finite, int dmax) {
  if (tor_bound >= 0) return finite ? tor_bound : std::min(tor_bound, dmax);
  return std::min(known, dmax);
}

}  // namespace detail

/// Betti numbers from Koszul homology, internal degrees up to dmax (or the known vanishing bound).
template <class F>
BettiTable graded_betti(const GradedModuleView<F>& M, int dmax) {
  BettiTable T;
  T.nvars = M.nvars;
  const int D = detail::betti_limit(M.known, M.tor_bound, M.finite, dmax);
  require(M.finite || D <= M.known, ErrorCode::CapTooSmall, "module data does not reach the requested degree");
  T.bound = D;
  T.complete = M.tor_bound >= 0 && D >= M.tor_bound;
  const int n = M.nvars;
  for (int j = 0; j <= D; ++j) {
    std::vector<std::size_t> rk(n + 2, 0);
    for (int i = 1; i <= n && i <= j; ++i) rk[i] = rank(detail::koszul_differential(M, i, j));
    for (int i = 0; i <= n && i <= j; ++i) {
      const std::int64_t c = static_cast<std::int64_t>(binomial(n, i) * M.dim(j - i));
      const std::int64_t b = c - static_cast<std::int64_t>(rk[i]) - static_cast<std::int64_t>(rk[i + 1]);
      if (b != 0) T.beta[{i, j}] = b;
    }
  }
  return T;
}

/// G-module structure of Tor_i(M, K)_j, as generator matrices of the group acting on Lambda^i h* (x) M_{j-i}.
std::vector<Matrix<FiniteField>> tor_action(const GradedModuleView<FiniteField>& M, const GroupSpec& group, int i, int j);

/// Decomposition of every nonzero Tor_i(M, K)_j into the given irreducibles.
std::map<std::pair<int, int>, Multiplicities> equivariant_betti(const GradedModuleView<FiniteField>& M,
                                                               const GroupSpec& group,
                                                               const std::vector<GradedRep>& irreducibles,
                                                               const BettiTable& table);

struct DualityReport {
  bool gorenstein = false;
  bool level = false;
  bool palindromic = false;
};

void to_json(nlohmann::json& j, const DualityReport& r);

/// Requires a complete table whose projective dimension equals the expected codimension.
DualityReport check_duality(const BettiTable& table, int codim);

/// Dimensions of the x-socle {v : x_j v = 0 for all j} in degrees 0..known.
template <class F>
std::vector<std::size_t> socle_dims(const GradedModuleView<F>& M) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= M.known; ++d) {
    const std::size_t q = M.dim(d), qn = M.dim(d + 1);
    Matrix<F> stacked(M.field, static_cast<std::size_t>(M.nvars) * qn, q);
    for (int j = 0; j < M.nvars; ++j) {
      const Matrix<F> m = M.mul(j, d);
      for (std::size_t r = 0; r < qn; ++r)
        for (std::size_t c = 0; c < q; ++c) stacked(static_cast<std::size_t>(j) * qn + r, c) = m(r, c);
    }
    out.push_back(q - rank(stacked));
  }
  return out;
}

}  // namespace cherednik
