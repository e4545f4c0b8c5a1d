#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/group.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/params.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/rep.hpp"

namespace cherednik {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

/// Element sum_b f_b (x) e_b of Sym(h*) (x) tau.
template <class F>
struct VermaVector {
  std::vector<Poly<F>> comp;

  static VermaVector zero(const F& f, int nvars, int dim) {
    VermaVector v;
    v.comp.assign(dim, Poly<F>(f, nvars));
    return v;
  }
  static VermaVector basis(const F& f, int nvars, int dim, const Monomial& m, int b) {
    VermaVector v = zero(f, nvars, dim);
    v.comp[b].add_term(m, f.one());
    return v;
  }

  int dim() const noexcept { return static_cast<int>(comp.size()); }
  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }
  int degree() const {
    int d = -1;
    for (const auto& p : comp) d = std::max(d, p.degree());
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& p : comp) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return false;
      if (d >= 0 && p.degree() != d) return false;
      d = p.degree();
    }
    return true;
  }

  VermaVector& operator+=(const VermaVector& o) {
    for (std::size_t b = 0; b < comp.size(); ++b) comp[b] += o.comp[b];
    return *this;
  }
  VermaVector& operator-=(const VermaVector& o) {
    for (std::size_t b = 0; b < comp.size(); ++b) comp[b] -= o.comp[b];
    return *this;
  }
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.comp == b.comp; }

  VermaVector scaled(const typename F::Elem& c) const {
    VermaVector r = *this;
    for (auto& p : r.comp) p = p.scaled(c);
    return r;
  }
  VermaVector times(const Poly<F>& f) const {
    VermaVector r = *this;
    for (auto& p : r.comp) p = p * f;
    return r;
  }

  std::string to_string(const std::vector<std::string>& labels) const {
    std::string out;
    for (std::size_t b = 0; b < comp.size(); ++b) {
      if (comp[b].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + comp[b].to_string() + ")|" + labels[b];
    }
    return out.empty() ? "0" : out;
  }
};

/// Verma module M(tau) over the rational Cherednik algebra with fixed parameters.
/// Graded slices M_d use the basis (monomial a, tau-basis b) with column index a * dim(tau) + b,
/// monomials in descending grlex order.
template <class F>
class VermaEngine {
 public:
  using Elem = typename F::Elem;
  using K = FiniteField;

  VermaEngine(GroupSpec group, GradedRep tau, F field, CherednikParams<F> params)
      : group_(std::move(group)),
        tau_(std::move(tau)),
        f_(std::move(field)),
        params_(std::move(params)),
        hbar_(f_.from_int(params_.hbar)) {
    require(params_.c.size() == group_.class_labels().size(), ErrorCode::InvalidParameters,
            "one parameter per reflection class is required");
    require(params_.hbar == 0 || params_.hbar == 1, ErrorCode::InvalidParameters, "hbar must be 0 or 1");
    require(tau_.group().m() == group_.m() && tau_.group().r() == group_.r() && tau_.group().n() == group_.n(),
            ErrorCode::IncompatibleGroup, "representation belongs to a different group");
    const K& k = tau_.field();
    const int n = group_.n();
    for (const auto& s : group_.reflections()) {
      RData d{s.element, s.alpha(k, n, group_.m(), group_.r()), Poly<K>(k, n), s.class_index, tau_.matrix(s.element)};
      for (int i = 0; i < n; ++i) d.alpha_poly.add_term(Monomial::var(i), d.alpha[i]);
      refl_.push_back(std::move(d));
    }
  }

  const GroupSpec& group() const noexcept { return group_; }
  const GradedRep& rep() const noexcept { return tau_; }
  const F& field() const noexcept { return f_; }
  const K& base_field() const noexcept { return tau_.field(); }
  const CherednikParams<F>& params() const noexcept { return params_; }
  int n() const noexcept { return group_.n(); }
  int tdim() const noexcept { return tau_.dim(); }

  const MonomialBasis& monomials(int d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mons_.find(d);
    if (it == mons_.end()) it = mons_.emplace(d, std::make_shared<MonomialBasis>(n(), d)).first;
    return *it->second;
  }
  std::size_t slice_dim(int d) const { return d < 0 ? 0 : monomials(d).size() * tdim(); }
  std::size_t column(int d, const Monomial& a, int b) const {
    const long idx = monomials(d).index(a);
    require(idx >= 0, ErrorCode::NonHomogeneous, "monomial of wrong degree");
    return static_cast<std::size_t>(idx) * tdim() + b;
  }
  std::pair<Monomial, int> column_label(int d, std::size_t col) const {
    return {monomials(d)[col / tdim()], static_cast<int>(col % tdim())};
  }

  /// Dunkl images D_i(e_col) for every basis column of M_d, as sparse vectors in M_{d-1}.
  const std::vector<SparseVec<F>>& dunkl_columns(int d, int i) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = dunkl_.find(d);
      if (it != dunkl_.end()) return (*it->second)[i];
    }
    auto table = std::make_shared<std::vector<std::vector<SparseVec<F>>>>(build_dunkl(d));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dunkl_.emplace(d, std::move(table)).first;
    return (*it->second)[i];
  }

  /// Columns of the action of g on M_d.
  std::vector<SparseVec<F>> act_slice(const GroupElement& g, int d) const {
    const int t = tdim();
    const FMatrix tg = tau_.matrix(g);
    const auto& mons = monomials(d);
    std::vector<SparseVec<F>> out(slice_dim(d));
    for (std::size_t a = 0; a < mons.size(); ++a) {
      const auto [img, shift] = act_on_monomial(g, mons[a], group_.m());
      const std::size_t base = static_cast<std::size_t>(mons.index(img)) * t;
      const auto z = base_field().xi_pow(shift);
      for (int b = 0; b < t; ++b)
        for (int b2 = 0; b2 < t; ++b2)
          if (!base_field().is_zero(tg(b2, b)))
            out[a * t + b].emplace_back(static_cast<std::uint32_t>(base + b2),
                                        f_.from_base(base_field().mul(z, tg(b2, b))));
    }
    return out;
  }

  /// Column of x_j * e_col in M_{d+1}.
  std::size_t mul_column(int j, int d, std::size_t col) const {
    const auto [a, b] = column_label(d, col);
    Monomial u = a;
    u.e[j] += 1;
    return column(d + 1, u, b);
  }

  std::vector<Elem> to_dense(const VermaVector<F>& v, int d) const {
    std::vector<Elem> out(slice_dim(d), f_.zero());
    for (int b = 0; b < tdim(); ++b)
      for (const auto& [m, c] : v.comp[b].terms()) {
        require(m.degree() == d, ErrorCode::NonHomogeneous, "vector is not homogeneous of degree " + std::to_string(d));
        out[column(d, m, b)] = c;
      }
    return out;
  }
  VermaVector<F> from_dense(std::span<const Elem> v, int d) const {
    VermaVector<F> out = VermaVector<F>::zero(f_, n(), tdim());
    for (std::size_t col = 0; col < v.size(); ++col) {
      if (f_.is_zero(v[col])) continue;
      const auto [a, b] = column_label(d, col);
      out.comp[b].add_term(a, v[col]);
    }
    return out;
  }

  Poly<F> act_poly(const GroupElement& g, const Poly<F>& p) const {
    Poly<F> r(f_, n());
    for (const auto& [m, c] : p.terms()) {
      const auto [img, shift] = act_on_monomial(g, m, group_.m());
      r.add_term(img, f_.mul(c, f_.from_base(base_field().xi_pow(shift))));
    }
    return r;
  }

  VermaVector<F> act(const GroupElement& g, const VermaVector<F>& v) const {
    require(v.dim() == tdim(), ErrorCode::DimensionMismatch, "vector does not belong to this Verma module");
    const FMatrix tg = tau_.matrix(g);
    VermaVector<F> out = VermaVector<F>::zero(f_, n(), tdim());
    for (int b = 0; b < tdim(); ++b) {
      if (v.comp[b].is_zero()) continue;
      const Poly<F> gf = act_poly(g, v.comp[b]);
      for (int b2 = 0; b2 < tdim(); ++b2)
        if (!base_field().is_zero(tg(b2, b))) out.comp[b2] += gf.scaled(f_.from_base(tg(b2, b)));
    }
    return out;
  }

  /// D_i v = hbar d_i v - sum_s c_s (y_i, alpha_s) ((1 - s) f / alpha_s) (x) s.v, evaluated on polynomials.
  VermaVector<F> dunkl_apply(int i, const VermaVector<F>& v) const {
    require(v.dim() == tdim(), ErrorCode::DimensionMismatch, "vector does not belong to this Verma module");
    require(v.is_homogeneous(), ErrorCode::NonHomogeneous, "Dunkl operators are applied to homogeneous vectors");
    VermaVector<F> out = VermaVector<F>::zero(f_, n(), tdim());
    if (params_.hbar != 0)
      for (int b = 0; b < tdim(); ++b) out.comp[b] += v.comp[b].derivative(i).scaled(hbar_);
    for (const auto& s : refl_) {
      if (base_field().is_zero(s.alpha[i])) continue;
      Poly<F> alpha(f_, n());
      for (int j = 0; j < n(); ++j) alpha.add_term(Monomial::var(j), f_.from_base(s.alpha[j]));
      const Elem coef = f_.mul(f_.neg(f_.from_base(s.alpha[i])), params_.c[s.cls]);
      for (int b = 0; b < tdim(); ++b) {
        if (v.comp[b].is_zero()) continue;
        const Poly<F> diff = v.comp[b] - act_poly(s.g, v.comp[b]);
        if (diff.is_zero()) continue;
        auto quo = diff.divide_exact(alpha);
        require(quo.has_value(), ErrorCode::DivisionFailure, "(1 - s) f is not divisible by alpha_s");
        for (int b2 = 0; b2 < tdim(); ++b2)
          if (!base_field().is_zero(s.tau(b2, b)))
            out.comp[b2] += quo->scaled(f_.mul(coef, f_.from_base(s.tau(b2, b))));
      }
    }
    return out;
  }

  /// Dense Dunkl operator D_i : M_d -> M_{d-1} via the precomputed table.
  std::vector<Elem> dunkl_dense(int i, int d, std::span<const Elem> v) const {
    std::vector<Elem> out(slice_dim(d - 1), f_.zero());
    if (d == 0) return out;
    const auto& cols = dunkl_columns(d, i);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (f_.is_zero(v[c])) continue;
      for (const auto& [row, val] : cols[c]) out[row] = f_.add(out[row], f_.mul(val, v[c]));
    }
    return out;
  }

 private:
  struct RData {
    GroupElement g;
    std::vector<K::Elem> alpha;
    Poly<K> alpha_poly;
    int cls;
    FMatrix tau;
  };

  std::vector<std::vector<SparseVec<F>>> build_dunkl(int d) const {
    const int nv = n(), t = tdim();
    const K& k = base_field();
    std::vector<std::vector<SparseVec<F>>> table(nv, std::vector<SparseVec<F>>(slice_dim(d)));
    if (d == 0) return table;
    const auto& mons = monomials(d);
    const auto& lower = monomials(d - 1);
    const int nclass = static_cast<int>(params_.c.size());
    // coefficient accumulators keyed by (row, class + 1); class slot 0 holds the hbar term
    std::vector<std::map<std::uint64_t, K::Elem>> acc(static_cast<std::size_t>(nv) * t);
    auto key = [&](std::size_t row, int cls) { return static_cast<std::uint64_t>(row) * (nclass + 1) + cls; };
    for (std::size_t a = 0; a < mons.size(); ++a) {
      for (auto& m : acc) m.clear();
      const Monomial& x = mons[a];
      if (params_.hbar != 0)
        for (int i = 0; i < nv; ++i) {
          if (x.e[i] == 0) continue;
          Monomial u = x;
          u.e[i] -= 1;
          const std::size_t base = static_cast<std::size_t>(lower.index(u)) * t;
          for (int b = 0; b < t; ++b) {
            auto& slot = acc[static_cast<std::size_t>(i) * t + b][key(base + b, 0)];
            slot = k.add(slot, k.from_int(x.e[i]));
          }
        }
      for (const auto& s : refl_) {
        const auto [img, shift] = act_on_monomial(s.g, x, group_.m());
        Poly<K> diff = Poly<K>::monomial(k, nv, x, k.one());
        diff.add_term(img, k.neg(k.xi_pow(shift)));
        if (diff.is_zero()) continue;
        auto quo = diff.divide_exact(s.alpha_poly);
        require(quo.has_value(), ErrorCode::DivisionFailure, "(1 - s) x^a is not divisible by alpha_s");
        std::vector<std::pair<std::size_t, K::Elem>> qterms;
        for (const auto& [u, qc] : quo->terms()) qterms.emplace_back(static_cast<std::size_t>(lower.index(u)) * t, qc);
        for (int i = 0; i < nv; ++i) {
          if (k.is_zero(s.alpha[i])) continue;
          const K::Elem factor = k.neg(s.alpha[i]);
          for (int b = 0; b < t; ++b)
            for (int b2 = 0; b2 < t; ++b2) {
              const K::Elem tv = s.tau(b2, b);
              if (k.is_zero(tv)) continue;
              const K::Elem ft = k.mul(factor, tv);
              auto& bucket = acc[static_cast<std::size_t>(i) * t + b];
              for (const auto& [base, qc] : qterms) {
                auto& slot = bucket[key(base + b2, s.cls + 1)];
                slot = k.add(slot, k.mul(ft, qc));
              }
            }
        }
      }
      for (int i = 0; i < nv; ++i)
        for (int b = 0; b < t; ++b) {
          auto& col = table[i][a * t + b];
          std::size_t cur_row = SIZE_MAX;
          Elem cur = f_.zero();
          auto flush = [&]() {
            if (cur_row != SIZE_MAX && !f_.is_zero(cur)) col.emplace_back(static_cast<std::uint32_t>(cur_row), cur);
          };
          for (const auto& [kk, val] : acc[static_cast<std::size_t>(i) * t + b]) {
            if (k.is_zero(val)) continue;
            const std::size_t row = kk / (nclass + 1);
            const int cls = static_cast<int>(kk % (nclass + 1));
            if (row != cur_row) {
              flush();
              cur_row = row;
              cur = f_.zero();
            }
            const Elem param = cls == 0 ? hbar_ : params_.c[cls - 1];
            cur = f_.add(cur, f_.mul(f_.from_base(val), param));
          }
          flush();
        }
    }
    return table;
  }

  GroupSpec group_;
  GradedRep tau_;
  F f_;
  CherednikParams<F> params_;
  Elem hbar_;
  std::vector<RData> refl_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<MonomialBasis>> mons_;
  mutable std::map<int, std::shared_ptr<std::vector<std::vector<SparseVec<F>>>>> dunkl_;
};

}  // namespace cherednik
