#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/groebner.hpp"
#include "cherednik/lmodule.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/resolutions.hpp"
#include "cherednik/series.hpp"
#include "cherednik/tableau.hpp"

namespace cherednik {

/// Square matrix of polynomials, stored by rows.
template <class F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

template <class F>
PolyMatrix<F> matrix_product(const PolyMatrix<F>& A, const PolyMatrix<F>& B) {
  const std::size_t n = A.size();
  const F& f = A[0][0].field();
  const int nv = A[0][0].nvars();
  PolyMatrix<F> C(n, std::vector<Poly<F>>(n, Poly<F>(f, nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) C[i][j] += A[i][k] * B[k][j];
  return C;
}

template <class F>
Poly<F> determinant(const PolyMatrix<F>& A) {
  const std::size_t n = A.size();
  if (n == 1) return A[0][0];
  Poly<F> det(A[0][0].field(), A[0][0].nvars());
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix<F> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly<F>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(A[r][k]);
      minor.push_back(std::move(row));
    }
    const Poly<F> term = A[0][c] * determinant(minor);
    det = c % 2 ? det - term : det + term;
  }
  return det;
}

/// Common degree of the nonzero entries; throws InhomogeneousGenerator if they differ.
template <class F>
int matrix_degree(const PolyMatrix<F>& A) {
  int d = -1;
  for (const auto& row : A)
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      require(e.is_homogeneous() && (d < 0 || e.degree() == d), ErrorCode::InhomogeneousGenerator,
              "matrix entries must be homogeneous of one degree");
      d = e.degree();
    }
  require(d > 0, ErrorCode::InhomogeneousGenerator, "matrix has no entries of positive degree");
  return d;
}

/// Columns of all matrices, as vectors of polynomials.
template <class F>
std::vector<std::vector<Poly<F>>> matrix_columns(const std::vector<PolyMatrix<F>>& mats) {
  std::vector<std::vector<Poly<F>>> cols;
  for (const auto& A : mats)
    for (std::size_t c = 0; c < A.size(); ++c) {
      std::vector<Poly<F>> v;
      for (const auto& row : A) v.push_back(row[c]);
      cols.push_back(std::move(v));
    }
  return cols;
}

struct MatrixKoszulReport {
  std::size_t size = 0;
  std::size_t count = 0;
  std::vector<int> degrees;
  bool commute = true;
  std::vector<std::pair<int, int>> noncommuting;
  /// Hilbert function of A / (determinants) through degree `bound`.
  std::vector<std::int64_t> determinant_quotient;
  bool determinants_regular = false;
  /// size * prod (1 - t^{deg}) / (1 - t)^n through degree `bound`.
  std::vector<std::int64_t> predicted;
  /// Hilbert function of A^size / (columns) through degree `bound`.
  std::vector<std::int64_t> column_quotient;
  bool predicted_matches_columns = false;
  std::optional<bool> columns_in_J;
  std::size_t columns_outside_J = 0;
  std::optional<bool> predicted_matches_L;
  int bound = 0;
};

void to_json(nlohmann::json& j, const MatrixKoszulReport& r);

/// Checks the matrix Koszul conditions for square homogeneous matrices over n variables. When L is given, the
/// columns are tested for membership in its J (in the basis of L's representation) and the predicted series is
/// compared with the Hilbert series of L.
template <class F>
MatrixKoszulReport matrix_koszul_check(const std::vector<PolyMatrix<F>>& mats, const LModule<F>* L = nullptr) {
  require(!mats.empty(), ErrorCode::SizeMismatch, "no matrices given");
  MatrixKoszulReport rep;
  rep.size = mats[0].size();
  rep.count = mats.size();
  for (const auto& A : mats) {
    require(A.size() == rep.size, ErrorCode::SizeMismatch, "matrices have different sizes");
    for (const auto& row : A) require(row.size() == rep.size, ErrorCode::SizeMismatch, "matrix is not square");
    rep.degrees.push_back(matrix_degree(A));
  }
  const F& f = mats[0][0][0].field();
  const int n = mats[0][0][0].nvars();

  for (std::size_t a = 0; a < mats.size(); ++a)
    for (std::size_t b = a + 1; b < mats.size(); ++b) {
      const auto ab = matrix_product(mats[a], mats[b]), ba = matrix_product(mats[b], mats[a]);
      bool same = true;
      for (std::size_t i = 0; i < rep.size && same; ++i)
        for (std::size_t j = 0; j < rep.size && same; ++j) same = ab[i][j] == ba[i][j];
      if (!same) {
        rep.commute = false;
        rep.noncommuting.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }

  std::vector<Poly<F>> dets;
  std::vector<int> det_degrees;
  for (const auto& A : mats) {
    dets.push_back(determinant(A));
    det_degrees.push_back(static_cast<int>(rep.size) * matrix_degree(A));
  }
  int det_bound = 2;
  for (int d : det_degrees) det_bound += d - 1;
  rep.determinant_quotient = quotient_hilbert(f, n, dets, det_bound);
  IntPoly num{1};
  for (int d : det_degrees) num = num * (IntPoly{1} - IntPoly::monomial(d));
  rep.determinants_regular = rep.determinant_quotient == expand_rational(num, std::vector<int>(n, 1), det_bound).coeffs;

  rep.bound = 2;
  for (int d : rep.degrees) rep.bound += d - 1;
  IntPoly pnum{static_cast<std::int64_t>(rep.size)};
  for (int d : rep.degrees) pnum = pnum * (IntPoly{1} - IntPoly::monomial(d));
  rep.predicted = expand_rational(pnum, std::vector<int>(n, 1), rep.bound).coeffs;
  const auto cols = matrix_columns(mats);
  rep.column_quotient = quotient_hilbert(f, n, cols, rep.bound, ModuleOrder::free(static_cast<int>(rep.size)));
  rep.predicted_matches_columns = rep.column_quotient == rep.predicted;

  if (L) {
    require(L->engine().tdim() == static_cast<int>(rep.size), ErrorCode::SizeMismatch,
            "matrix size differs from the representation dimension");
    for (const auto& col : cols) {
      auto v = VermaVector<F>::zero(f, n, static_cast<int>(rep.size));
      for (std::size_t r = 0; r < rep.size; ++r) v.comp[r] = col[r];
      if (!kernel_membership(v, *L)) ++rep.columns_outside_J;
    }
    rep.columns_in_J = rep.columns_outside_J == 0;
    std::vector<std::int64_t> h = L->hilbert();
    std::vector<std::int64_t> want = rep.predicted;
    while (!want.empty() && want.back() == 0) want.pop_back();
    rep.predicted_matches_L = h == want;
  }
  return rep;
}

/// Graded Betti numbers of A^size / (columns of all matrices), computed through internal degree dmax.
template <class F>
BettiTable column_module_betti(const std::vector<PolyMatrix<F>>& mats, int dmax) {
  const F& f = mats[0][0][0].field();
  const int n = mats[0][0][0].nvars();
  const ModuleOrder order = ModuleOrder::free(static_cast<int>(mats[0].size()));
  std::vector<ModuleVec<F>> vs;
  for (const auto& col : matrix_columns(mats)) vs.push_back(module_vec(col, order));
  const GroebnerQuotient<F> Q(ModuleGroebner<F>::compute(f, n, order, vs, dmax));
  return graded_betti(module_view(Q, dmax), dmax);
}

/// Matrix X with b_j = sum_i X(i, j) g_i, where g_i are the Garnir polynomials of the standard tableaux of lambda
/// (the basis used by specht reps) and b_j are the given polynomials. Throws SolveFailure if some b_j lies outside
/// their span.
template <class F>
Matrix<F> specht_basis_change(const F& f, int nvars, const Partition& lambda, const std::vector<Poly<F>>& basis) {
  std::vector<Poly<F>> garnir;
  for (const auto& t : standard_tableaux(lambda)) garnir.push_back(garnir_polynomial(f, nvars, t));
  require(basis.size() == garnir.size(), ErrorCode::DimensionMismatch, "basis size differs from the Specht dimension");
  std::map<Monomial, std::size_t, GrlexDescending> index;
  for (const auto& g : garnir)
    for (const auto& [mon, c] : g.terms()) index.emplace(mon, index.size());
  Matrix<F> A(f, index.size(), garnir.size());
  for (std::size_t i = 0; i < garnir.size(); ++i)
    for (const auto& [mon, c] : garnir[i].terms()) A(index.at(mon), i) = c;
  Matrix<F> X(f, garnir.size(), garnir.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<typename F::Elem> rhs(index.size(), f.zero());
    for (const auto& [mon, c] : basis[j].terms()) {
      auto it = index.find(mon);
      require(it != index.end(), ErrorCode::SolveFailure, "basis polynomial is not in the Specht module");
      rhs[it->second] = c;
    }
    const auto sol = solve(A, rhs);
    require(sol.has_value(), ErrorCode::SolveFailure, "basis polynomial is not in the Specht module");
    for (std::size_t i = 0; i < garnir.size(); ++i) X(i, j) = (*sol)[i];
  }
  return X;
}

/// X * A: re-expresses every column of A from the basis b into the Garnir basis.
template <class F>
PolyMatrix<F> change_basis(const Matrix<F>& X, const PolyMatrix<F>& A) {
  const F& f = A[0][0].field();
  const int nv = A[0][0].nvars();
  PolyMatrix<F> out(A.size(), std::vector<Poly<F>>(A.size(), Poly<F>(f, nv)));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < A.size(); ++k) {
      if (f.is_zero(X(i, k))) continue;
      for (std::size_t j = 0; j < A.size(); ++j) out[i][j] += A[k][j].scaled(X(i, k));
    }
  return out;
}

/// Matrices for gamma:0 of G(m,m,3) on x, y, z: diag(xyz), diag(x^m + y^m + z^m) and [[-x^m, y^m], [z^m, -x^m]].
template <class F>
std::vector<PolyMatrix<F>> gamma0_matrices(const F& f, int m) {
  const auto x = Poly<F>::variable(f, 3, 0), y = Poly<F>::variable(f, 3, 1), z = Poly<F>::variable(f, 3, 2);
  const Poly<F> zero(f, 3);
  const auto xm = x.pow(m), ym = y.pow(m), zm = z.pow(m);
  const auto e = x * y * z, pm = xm + ym + zm;
  return {{{e, zero}, {zero, e}}, {{pm, zero}, {zero, pm}}, {{-xm, ym}, {zm, -xm}}};
}

}  // namespace cherednik
