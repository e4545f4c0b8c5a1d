#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/field.hpp"

namespace cherednik {

/// dst += c * src, elementwise.
template <class F>
void row_axpy(const F& f, std::span<typename F::Elem> dst, std::span<const typename F::Elem> src,
              const typename F::Elem& c) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!f.is_zero(src[i])) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

inline void row_axpy(const FiniteField& f, std::span<FiniteField::Elem> dst, std::span<const FiniteField::Elem> src,
                     FiniteField::Elem c) {
  f.axpy(dst, src, c);
}

/// Dense row-major matrix over a field context.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : f_(std::move(field)), r_(rows), c_(cols), a_(rows * cols, f_.zero()) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  const F& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return r_; }
  std::size_t cols() const noexcept { return c_; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::span<Elem> row(std::size_t i) { return {a_.data() + i * c_, c_}; }
  std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }

  void append_row(std::span<const Elem> v) {
    require(v.size() == c_, ErrorCode::DimensionMismatch, "row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++r_;
  }
  void truncate_rows(std::size_t n) {
    r_ = n;
    a_.resize(r_ * c_, f_.zero());
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.c_ == b.r_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    require(a.f_.same_field(b.f_), ErrorCode::MixedFields, "matrix product over different fields");
    Matrix r(a.f_, a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) row_axpy(a.f_, r.row(i), b.row(k), a(i, k));
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!a.f_.eq(a.a_[i], b.a_[i])) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!f_.is_zero(x)) return false;
    return true;
  }

 private:
  F f_;
  std::size_t r_, c_;
  std::vector<Elem> a_;
};

/// Stacks b below a; the two matrices must share one field.
template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  require(a.field().same_field(b.field()), ErrorCode::MixedFields, "cannot stack matrices over different fields");
  require(a.cols() == b.cols(), ErrorCode::DimensionMismatch, "column count mismatch");
  Matrix<F> r = a;
  for (std::size_t i = 0; i < b.rows(); ++i) r.append_row(b.row(i));
  return r;
}

/// In-place reduced row echelon form. Zero rows are dropped; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& a) {
  const F& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && f.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    const auto inv = f.inv(a(r, c));
    if (!f.eq(inv, f.one()))
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = f.mul(a(r, k), inv);
    const auto src = a.row(r).subspan(c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      row_axpy(f, a.row(i).subspan(c), src, f.neg(a(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  a.truncate_rows(r);
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  return rref(a).size();
}

/// Basis of the right kernel {v : a v = 0}, returned as the rows of a matrix in RREF.
template <class F>
Matrix<F> kernel_basis(Matrix<F> a) {
  const F& f = a.field();
  const auto pivots = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  Matrix<F> k(f, 0, a.cols());
  std::vector<typename F::Elem> v(a.cols(), f.zero());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::fill(v.begin(), v.end(), f.zero());
    v[c] = f.one();
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = f.neg(a(t, c));
    k.append_row(v);
  }
  rref(k);
  return k;
}

/// Some solution x of a x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& a, const std::vector<typename F::Elem>& b) {
  const F& f = a.field();
  require(b.size() == a.rows(), ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  std::vector<typename F::Elem> x(a.cols(), f.zero());
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    if (pivots[t] == a.cols()) return std::nullopt;
    x[pivots[t]] = aug(t, a.cols());
  }
  return x;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  const F& f = a.field();
  const std::size_t n = a.rows();
  require(n == a.cols(), ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Incrementally maintained row space in reduced echelon form.
template <class F>
class EchelonSpace {
 public:
  using Elem = typename F::Elem;

  EchelonSpace(F field, std::size_t dim) : f_(std::move(field)), dim_(dim), rows_(f_, 0, dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const Matrix<F>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the current basis in place.
  void reduce(std::span<Elem> v) const {
    for (std::size_t t = 0; t < pivots_.size(); ++t) {
      const auto c = v[pivots_[t]];
      if (!f_.is_zero(c)) row_axpy(f_, v, rows_.row(t), f_.neg(c));
    }
  }
  bool contains(std::vector<Elem> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }
  /// Adds v to the span; returns false when v was already in it.
  bool insert(std::vector<Elem> v) {
    reduce(v);
    std::size_t c = 0;
    while (c < dim_ && f_.is_zero(v[c])) ++c;
    if (c == dim_) return false;
    const auto inv = f_.inv(v[c]);
    for (auto& x : v) x = f_.mul(x, inv);
    for (std::size_t t = 0; t < pivots_.size(); ++t) {
      const auto e = rows_(t, c);
      if (!f_.is_zero(e)) row_axpy(f_, rows_.row(t), std::span<const Elem>(v), f_.neg(e));
    }
    rows_.append_row(v);
    pivots_.push_back(c);
    canonicalize_order();
    return true;
  }

 private:
  void canonicalize_order() {
    for (std::size_t t = pivots_.size() - 1; t > 0 && pivots_[t - 1] > pivots_[t]; --t) {
      std::swap(pivots_[t - 1], pivots_[t]);
      rows_.swap_rows(t - 1, t);
    }
  }

  F f_;
  std::size_t dim_;
  Matrix<F> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cherednik
