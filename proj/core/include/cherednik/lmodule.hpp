#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

/// Echelon basis of a subspace U of a graded slice V (dimension dim), together with
/// coordinates on V/U given by the non-pivot columns.
template <class F>
class SubSlice {
 public:
  using Elem = typename F::Elem;

  SubSlice(F field, std::size_t dim) : f_(std::move(field)), dim_(dim), rows_(f_, 0, dim) { index(); }

  /// Takes arbitrary spanning rows and echelonizes them.
  static SubSlice from_rows(Matrix<F> rows) {
    SubSlice s(rows.field(), rows.cols());
    s.pivots_ = rref(rows);
    s.rows_ = std::move(rows);
    s.index();
    return s;
  }

  const F& field() const noexcept { return f_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t qdim() const noexcept { return dim_ - pivots_.size(); }
  const Matrix<F>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<std::size_t>& quotient_columns() const noexcept { return qcols_; }
  long quotient_index(std::size_t col) const noexcept { return qindex_[col]; }

  /// Coordinates of the class of a sparse vector of V in V/U.
  std::vector<Elem> project(const SparseVec<F>& v) const {
    std::vector<Elem> out(qdim(), f_.zero());
    for (const auto& [row, val] : v) add_projected(out, row, val);
    return out;
  }
  std::vector<Elem> project(std::span<const Elem> v) const {
    std::vector<Elem> out(qdim(), f_.zero());
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!f_.is_zero(v[c])) add_projected(out, c, v[c]);
    return out;
  }
  void add_projected(std::vector<Elem>& out, std::size_t col, const Elem& val) const {
    const long qi = qindex_[col];
    if (qi >= 0) {
      out[qi] = f_.add(out[qi], val);
      return;
    }
    for (const auto& [qj, w] : reduction_[pivot_pos_[col]]) out[qj] = f_.add(out[qj], f_.mul(val, w));
  }
  bool contains(std::span<const Elem> v) const {
    for (const auto& x : project(v))
      if (!f_.is_zero(x)) return false;
    return true;
  }
  /// Representative in V of a quotient coordinate vector.
  std::vector<Elem> lift(std::span<const Elem> q) const {
    std::vector<Elem> out(dim_, f_.zero());
    for (std::size_t i = 0; i < q.size(); ++i) out[qcols_[i]] = q[i];
    return out;
  }

 private:
  void index() {
    qindex_.assign(dim_, -1);
    pivot_pos_.assign(dim_, -1);
    std::vector<char> piv(dim_, 0);
    for (std::size_t t = 0; t < pivots_.size(); ++t) {
      piv[pivots_[t]] = 1;
      pivot_pos_[pivots_[t]] = static_cast<long>(t);
    }
    qcols_.clear();
    for (std::size_t c = 0; c < dim_; ++c)
      if (!piv[c]) {
        qindex_[c] = static_cast<long>(qcols_.size());
        qcols_.push_back(c);
      }
    reduction_.assign(pivots_.size(), {});
    for (std::size_t t = 0; t < pivots_.size(); ++t)
      for (std::size_t i = 0; i < qcols_.size(); ++i) {
        const auto& x = rows_(t, qcols_[i]);
        if (!f_.is_zero(x)) reduction_[t].emplace_back(static_cast<std::uint32_t>(i), f_.neg(x));
      }
  }

  F f_;
  std::size_t dim_;
  Matrix<F> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> qcols_;
  std::vector<long> qindex_;
  std::vector<long> pivot_pos_;
  std::vector<SparseVec<F>> reduction_;
};

/// Degree slices 0..dmax of the submodule of Sym(h*)^t (x) generated by homogeneous generators.
/// Slices use the same coordinates as VermaEngine (monomial index * t + basis index).
template <class F>
std::vector<SubSlice<F>> submodule_slices(const F& f, int nvars, int t, const std::vector<VermaVector<F>>& gens,
                                          int dmax) {
  std::vector<std::pair<int, const VermaVector<F>*>> by_degree;
  for (const auto& g : gens) {
    require(g.dim() == t, ErrorCode::DimensionMismatch, "generator has the wrong number of components");
    require(g.is_homogeneous(), ErrorCode::InhomogeneousGenerator, "generators must be homogeneous");
    if (!g.is_zero()) by_degree.emplace_back(g.degree(), &g);
  }
  std::vector<SubSlice<F>> out;
  MonomialBasis prev_mons;
  for (int d = 0; d <= dmax; ++d) {
    MonomialBasis mons(nvars, d);
    const std::size_t N = mons.size() * t;
    Matrix<F> rows(f, 0, N);
    std::vector<typename F::Elem> v(N, f.zero());
    if (d > 0 && out.back().rank() == out.back().dim() && out.back().dim() > 0) {
      for (std::size_t c = 0; c < N; ++c) {
        std::fill(v.begin(), v.end(), f.zero());
        v[c] = f.one();
        rows.append_row(v);
      }
      out.push_back(SubSlice<F>::from_rows(std::move(rows)));
      prev_mons = std::move(mons);
      continue;
    }
    if (d > 0) {
      const auto& prev = out.back();
      for (std::size_t r = 0; r < prev.rank(); ++r)
        for (int j = 0; j < nvars; ++j) {
          std::fill(v.begin(), v.end(), f.zero());
          const auto row = prev.rows().row(r);
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (f.is_zero(row[c])) continue;
            Monomial u = prev_mons[c / t];
            u.e[j] += 1;
            v[static_cast<std::size_t>(mons.index(u)) * t + c % t] = row[c];
          }
          rows.append_row(v);
        }
    }
    for (const auto& [deg, g] : by_degree) {
      if (deg != d) continue;
      std::fill(v.begin(), v.end(), f.zero());
      for (int b = 0; b < t; ++b)
        for (const auto& [m, c] : g->comp[b].terms()) v[static_cast<std::size_t>(mons.index(m)) * t + b] = c;
      rows.append_row(v);
    }
    out.push_back(SubSlice<F>::from_rows(std::move(rows)));
    prev_mons = std::move(mons);
  }
  return out;
}

/// Echelon basis of the degree-d part of the submodule generated by gens.
template <class F>
SubSlice<F> module_slice(const F& f, int nvars, int t, const std::vector<VermaVector<F>>& gens, int d) {
  auto s = submodule_slices(f, nvars, t, gens, d);
  return std::move(s.back());
}

enum class LStatus { Complete, TruncatedAtCap };

inline std::string to_string(LStatus s) { return s == LStatus::Complete ? "complete" : "truncated-at-cap"; }

/// A graded quotient M(tau)/U by a graded subspace U given slice by slice.
template <class F>
class VermaQuotient {
 public:
  using Elem = typename F::Elem;
  using Engine = VermaEngine<F>;

  VermaQuotient(std::shared_ptr<const Engine> engine, std::vector<SubSlice<F>> slices)
      : eng_(std::move(engine)), slices_(std::move(slices)) {}

  const Engine& engine() const noexcept { return *eng_; }
  std::shared_ptr<const Engine> engine_ptr() const noexcept { return eng_; }
  const F& field() const noexcept { return eng_->field(); }
  int bound() const noexcept { return static_cast<int>(slices_.size()) - 1; }
  const SubSlice<F>& slice(int d) const { return slices_.at(d); }
  const std::vector<SubSlice<F>>& slices() const noexcept { return slices_; }

  std::size_t qdim(int d) const { return d < 0 || d > bound() ? 0 : slices_[d].qdim(); }
  std::vector<std::int64_t> hilbert() const {
    std::vector<std::int64_t> h;
    for (const auto& s : slices_) h.push_back(static_cast<std::int64_t>(s.qdim()));
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
  }
  int top_degree() const { return static_cast<int>(hilbert().size()) - 1; }
  /// True when the quotient is known to vanish past its top degree.
  bool finite() const { return bound() > top_degree(); }

  /// x_j : Q_d -> Q_{d+1}
  Matrix<F> mul_map(int j, int d) const {
    const std::size_t qd = qdim(d), qn = qdim(d + 1);
    Matrix<F> out(field(), qn, qd);
    if (qn == 0 || qd == 0) return out;
    for (std::size_t i = 0; i < qd; ++i) {
      const std::size_t col = eng_->mul_column(j, d, slices_[d].quotient_columns()[i]);
      std::vector<Elem> img(qn, field().zero());
      slices_[d + 1].add_projected(img, col, field().one());
      for (std::size_t r = 0; r < qn; ++r) out(r, i) = img[r];
    }
    return out;
  }

  /// D_i : Q_d -> Q_{d-1}, well defined when U is Dunkl-stable.
  Matrix<F> dunkl_map(int i, int d) const {
    const std::size_t qd = qdim(d), qp = qdim(d - 1);
    Matrix<F> out(field(), qp, qd);
    if (qd == 0 || qp == 0) return out;
    const auto& cols = eng_->dunkl_columns(d, i);
    for (std::size_t k = 0; k < qd; ++k) {
      const auto img = slices_[d - 1].project(cols[slices_[d].quotient_columns()[k]]);
      for (std::size_t r = 0; r < qp; ++r) out(r, k) = img[r];
    }
    return out;
  }

  /// g : Q_d -> Q_d, well defined when U is G-stable.
  Matrix<F> group_map(const GroupElement& g, int d) const {
    const std::size_t qd = qdim(d);
    Matrix<F> out(field(), qd, qd);
    if (qd == 0) return out;
    const auto cols = eng_->act_slice(g, d);
    for (std::size_t k = 0; k < qd; ++k) {
      const auto img = slices_[d].project(cols[slices_[d].quotient_columns()[k]]);
      for (std::size_t r = 0; r < qd; ++r) out(r, k) = img[r];
    }
    return out;
  }

  bool contains(const VermaVector<F>& v) const {
    require(v.is_homogeneous(), ErrorCode::NonHomogeneous, "membership is tested on homogeneous vectors");
    if (v.is_zero()) return true;
    const int d = v.degree();
    if (d > bound() && finite()) return true;
    require(d <= bound(), ErrorCode::CapTooSmall, "degree beyond computed slices");
    const auto dense = eng_->to_dense(v, d);
    return slices_[d].contains(dense);
  }

  /// Whether D_i maps U_d into U_{d-1} for every computed degree.
  bool is_dunkl_stable() const {
    for (int d = 1; d <= bound(); ++d)
      for (int i = 0; i < eng_->n(); ++i) {
        const auto& rows = slices_[d].rows();
        for (std::size_t r = 0; r < rows.rows(); ++r) {
          const auto img = eng_->dunkl_dense(i, d, rows.row(r));
          if (!slices_[d - 1].contains(img)) return false;
        }
      }
    return true;
  }

  /// Whether every group generator maps U_d into itself.
  bool is_group_stable() const {
    for (const auto& g : eng_->group().generators())
      for (int d = 0; d <= bound(); ++d) {
        const auto cols = eng_->act_slice(g, d);
        const auto& rows = slices_[d].rows();
        for (std::size_t r = 0; r < rows.rows(); ++r) {
          std::vector<Elem> img(slices_[d].dim(), field().zero());
          const auto row = rows.row(r);
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (field().is_zero(row[c])) continue;
            for (const auto& [rr, val] : cols[c]) img[rr] = field().add(img[rr], field().mul(val, row[c]));
          }
          if (!slices_[d].contains(img)) return false;
        }
      }
    return true;
  }

 protected:
  std::shared_ptr<const Engine> eng_;
  std::vector<SubSlice<F>> slices_;
};

/// L(tau) = M(tau)/J with J computed degree by degree from J_d = {v : D_i v in J_{d-1} for all i}.
template <class F>
class LModule : public VermaQuotient<F> {
 public:
  LModule(std::shared_ptr<const VermaEngine<F>> engine, std::vector<SubSlice<F>> slices, LStatus status, int cap)
      : VermaQuotient<F>(std::move(engine), std::move(slices)), status_(status), cap_(cap) {}

  LStatus status() const noexcept { return status_; }
  int cap() const noexcept { return cap_; }
  const SubSlice<F>& J(int d) const { return this->slice(d); }

 private:
  LStatus status_;
  int cap_;
};

/// Largest possible top degree: sum (d_i - 1) for hbar = 0 and sum (p d_i - 1) for hbar = 1.
inline int default_cap(const GroupSpec& g, int hbar, std::uint32_t p) {
  int s = 0;
  for (int d : g.degrees()) s += (hbar == 0 ? d : static_cast<int>(p) * d) - 1;
  return s;
}

/// One step of the recursion: the kernel of M_d -> (M_{d-1}/J_{d-1})^n.
template <class F>
SubSlice<F> compute_J_slice(const VermaEngine<F>& eng, const SubSlice<F>& prev, int d) {
  const F& f = eng.field();
  const std::size_t N = eng.slice_dim(d), q = prev.qdim();
  const int n = eng.n();
  if (d == 0) return SubSlice<F>(f, N);
  Matrix<F> A(f, static_cast<std::size_t>(n) * q, N);
  for (int i = 0; i < n; ++i) {
    const auto& cols = eng.dunkl_columns(d, i);
    for (std::size_t c = 0; c < N; ++c) {
      const auto img = prev.project(cols[c]);
      for (std::size_t r = 0; r < q; ++r)
        if (!f.is_zero(img[r])) A(static_cast<std::size_t>(i) * q + r, c) = img[r];
    }
  }
  return SubSlice<F>::from_rows(kernel_basis(std::move(A)));
}

template <class F>
LModule<F> compute_L(std::shared_ptr<const VermaEngine<F>> eng, int cap) {
  require(cap >= 1, ErrorCode::CapTooSmall, "cap must be at least 1");
  std::vector<SubSlice<F>> slices;
  slices.emplace_back(eng->field(), eng->slice_dim(0));
  for (int d = 1; d <= cap + 1; ++d) {
    slices.push_back(compute_J_slice(*eng, slices.back(), d));
    if (slices.back().qdim() == 0) return LModule<F>(eng, std::move(slices), LStatus::Complete, cap);
  }
  return LModule<F>(eng, std::move(slices), LStatus::TruncatedAtCap, cap);
}

template <class F>
LModule<F> compute_L(std::shared_ptr<const VermaEngine<F>> eng) {
  return compute_L(eng, default_cap(eng->group(), eng->params().hbar, eng->base_field().characteristic()));
}

template <class F>
LModule<F> compute_L(std::shared_ptr<VermaEngine<F>> eng, int cap) {
  return compute_L(std::shared_ptr<const VermaEngine<F>>(std::move(eng)), cap);
}

template <class F>
LModule<F> compute_L(std::shared_ptr<VermaEngine<F>> eng) {
  return compute_L(std::shared_ptr<const VermaEngine<F>>(std::move(eng)));
}

/// Whether v lies in the computed J.
template <class F>
bool kernel_membership(const VermaVector<F>& v, const LModule<F>& L) {
  return L.contains(v);
}

/// phi applied to D_{w_d} ... D_{w_1} v (w_1 applied first).
template <class F>
typename F::Elem beta_pairing(const VermaEngine<F>& eng, const VermaVector<F>& v, const std::vector<int>& word,
                              const std::vector<typename F::Elem>& phi) {
  const F& f = eng.field();
  require(v.is_homogeneous(), ErrorCode::NonHomogeneous, "beta is evaluated on homogeneous vectors");
  const int d = v.is_zero() ? static_cast<int>(word.size()) : v.degree();
  require(static_cast<int>(word.size()) == d, ErrorCode::LengthMismatch, "word length must equal the degree");
  require(static_cast<int>(phi.size()) == eng.tdim(), ErrorCode::DimensionMismatch, "functional has wrong length");
  if (v.is_zero()) return f.zero();
  std::vector<typename F::Elem> cur = eng.to_dense(v, d);
  for (int k = 0; k < d; ++k) cur = eng.dunkl_dense(word[k], d - k, cur);
  typename F::Elem s = f.zero();
  for (int b = 0; b < eng.tdim(); ++b) s = f.add(s, f.mul(phi[b], cur[b]));
  return s;
}

/// M(tau)/U for U generated by homogeneous generators, computed to degree dmax.
template <class F>
VermaQuotient<F> quotient_by_generators(std::shared_ptr<const VermaEngine<F>> eng,
                                        const std::vector<VermaVector<F>>& gens, int dmax) {
  auto slices = submodule_slices(eng->field(), eng->n(), eng->tdim(), gens, dmax);
  return VermaQuotient<F>(std::move(eng), std::move(slices));
}

}  // namespace cherednik
