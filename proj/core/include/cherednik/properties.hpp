#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/lmodule.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

struct PropertyReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
  void record(bool pass, const std::string& where) {
    ++checks;
    if (pass) return;
    if (failures == 0) first_failure = where;
    ++failures;
  }
};

void to_json(nlohmann::json& j, const PropertyReport& r);

namespace detail {

template <class F>
std::vector<typename F::Elem> unit(const F& f, std::size_t dim, std::size_t k) {
  std::vector<typename F::Elem> v(dim, f.zero());
  v[k] = f.one();
  return v;
}

template <class F>
void axpy(const F& f, std::vector<typename F::Elem>& y, const typename F::Elem& a, const SparseVec<F>& x) {
  for (const auto& [r, v] : x) y[r] = f.add(y[r], f.mul(a, v));
}

template <class F>
std::vector<typename F::Elem> apply_columns(const F& f, const std::vector<SparseVec<F>>& cols,
                                            std::span<const typename F::Elem> v, std::size_t out_dim) {
  std::vector<typename F::Elem> out(out_dim, f.zero());
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!f.is_zero(v[c])) axpy(f, out, v[c], cols[c]);
  return out;
}

template <class F>
std::vector<typename F::Elem> multiply_x(const VermaEngine<F>& eng, int j, int d, std::span<const typename F::Elem> v) {
  const F& f = eng.field();
  std::vector<typename F::Elem> out(eng.slice_dim(d + 1), f.zero());
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!f.is_zero(v[c])) {
      const std::size_t r = eng.mul_column(j, d, c);
      out[r] = f.add(out[r], v[c]);
    }
  return out;
}

template <class F>
bool equal(const F& f, const std::vector<typename F::Elem>& a, const std::vector<typename F::Elem>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!f.is_zero(f.sub(a[k], b[k]))) return false;
  return true;
}

}  // namespace detail

/// D_i D_j = D_j D_i on every basis vector of M_d, 2 <= d <= dmax.
template <class F>
PropertyReport check_dunkl_commutation(const VermaEngine<F>& eng, int dmax) {
  PropertyReport rep{"dunkl-commutation"};
  const F& f = eng.field();
  for (int d = 2; d <= dmax; ++d)
    for (std::size_t col = 0; col < eng.slice_dim(d); ++col) {
      const auto e = detail::unit(f, eng.slice_dim(d), col);
      for (int i = 0; i < eng.n(); ++i)
        for (int j = i + 1; j < eng.n(); ++j) {
          const auto a = eng.dunkl_dense(i, d - 1, eng.dunkl_dense(j, d, e));
          const auto b = eng.dunkl_dense(j, d - 1, eng.dunkl_dense(i, d, e));
          rep.record(detail::equal(f, a, b), "degree " + std::to_string(d) + ", D" + std::to_string(i + 1) + " D" +
                                                  std::to_string(j + 1) + ", column " + std::to_string(col));
        }
    }
  return rep;
}

/// [y_i, x_j] = hbar (y_i, x_j) - sum_s c_s (y_i, alpha_s)(alpha_s^vee, x_j) s on every basis vector of M_d, d <= dmax.
template <class F>
PropertyReport check_commutation_relation(const VermaEngine<F>& eng, int dmax) {
  PropertyReport rep{"commutation-relation"};
  const F& f = eng.field();
  const auto& G = eng.group();
  const int n = eng.n();
  for (int d = 0; d <= dmax; ++d) {
    std::vector<std::vector<SparseVec<F>>> acts;
    for (const auto& s : G.reflections()) acts.push_back(eng.act_slice(s.element, d));
    const std::size_t dim = eng.slice_dim(d);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto e = detail::unit(f, dim, col);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto lhs = eng.dunkl_dense(i, d + 1, detail::multiply_x(eng, j, d, e));
          if (d > 0) {
            const auto back = detail::multiply_x(eng, j, d - 1, eng.dunkl_dense(i, d, e));
            for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] = f.sub(lhs[k], back[k]);
          }
          std::vector<typename F::Elem> rhs(dim, f.zero());
          if (i == j && eng.params().hbar != 0) rhs[col] = f.from_int(eng.params().hbar);
          for (std::size_t k = 0; k < G.reflections().size(); ++k) {
            const auto& s = G.reflections()[k];
            const auto& K = eng.base_field();
            const auto a = s.alpha(K, n, G.m(), G.r()), av = s.alpha_check(K, n, G.m(), G.r());
            const auto w = K.mul(a[i], av[j]);
            if (K.is_zero(w)) continue;
            const auto coef = f.neg(f.mul(eng.params().c[s.class_index], f.from_base(w)));
            detail::axpy(f, rhs, coef, acts[k][col]);
          }
          rep.record(detail::equal(f, lhs, rhs), "degree " + std::to_string(d) + ", y" + std::to_string(i + 1) +
                                                      " x" + std::to_string(j + 1) + ", column " + std::to_string(col));
        }
    }
  }
  return rep;
}

/// g D_{y_i} = D_{g y_i} g for every generator g, with g y_i = xi^{-e_i} y_{perm(i)}.
template <class F>
PropertyReport check_equivariance(const VermaEngine<F>& eng, int dmax) {
  PropertyReport rep{"g-equivariance"};
  const F& f = eng.field();
  const auto& G = eng.group();
  for (const auto& g : G.generators())
    for (int d = 1; d <= dmax; ++d) {
      const auto act_d = eng.act_slice(g, d), act_p = eng.act_slice(g, d - 1);
      const std::size_t dim = eng.slice_dim(d);
      for (std::size_t col = 0; col < dim; ++col) {
        const auto e = detail::unit(f, dim, col);
        const auto ge = detail::apply_columns(f, act_d, std::span<const typename F::Elem>(e), dim);
        for (int i = 0; i < eng.n(); ++i) {
          const auto lhs = detail::apply_columns(f, act_p, std::span<const typename F::Elem>(eng.dunkl_dense(i, d, e)),
                                                 eng.slice_dim(d - 1));
          auto rhs = eng.dunkl_dense(g.perm[i], d, ge);
          const auto scale = f.from_base(eng.base_field().xi_pow((G.m() - g.exps[i] % G.m()) % G.m()));
          for (auto& x : rhs) x = f.mul(x, scale);
          rep.record(detail::equal(f, lhs, rhs), g.to_string() + ", degree " + std::to_string(d) + ", y" +
                                                      std::to_string(i + 1) + ", column " + std::to_string(col));
        }
      }
    }
  return rep;
}

/// J is stable under the Dunkl operators and the group generators in every computed degree.
template <class F>
PropertyReport check_submodule_closure(const LModule<F>& L) {
  PropertyReport rep{"submodule-closure"};
  rep.record(L.is_dunkl_stable(), "Dunkl operators leave J");
  rep.record(L.is_group_stable(), "group generators leave J");
  return rep;
}

}  // namespace cherednik
