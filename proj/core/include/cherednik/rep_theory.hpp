#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/group.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/rep.hpp"

namespace cherednik {

template <class F>
Matrix<F> embed_matrix(const F& f, const FMatrix& m) {
  Matrix<F> out(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.from_base(m(i, j));
  return out;
}

/// Action matrices on span(rows of basis) of operators given on the ambient space.
/// Throws NotGStable when an image leaves the span.
template <class F>
std::vector<Matrix<F>> subspace_action(const std::vector<Matrix<F>>& ambient, const Matrix<F>& basis) {
  const F& f = basis.field();
  const std::size_t s = basis.rows(), N = basis.cols();
  const Matrix<F> bt = basis.transpose();
  std::vector<Matrix<F>> out;
  for (const auto& a : ambient) {
    require(a.rows() == N && a.cols() == N, ErrorCode::DimensionMismatch, "operator does not act on the ambient space");
    Matrix<F> m(f, s, s);
    for (std::size_t k = 0; k < s; ++k) {
      std::vector<typename F::Elem> img(N, f.zero());
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
          if (!f.is_zero(a(r, c)) && !f.is_zero(basis(k, c))) img[r] = f.add(img[r], f.mul(a(r, c), basis(k, c)));
      const auto coords = solve(bt, img);
      require(coords.has_value(), ErrorCode::NotGStable, "subspace is not stable under the group");
      for (std::size_t j = 0; j < s; ++j) m(j, k) = (*coords)[j];
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Basis (as rows, X vectorized row-major) of {X : B_g X = X A_g for all g}, X of shape dim(B) x dim(A).
template <class F>
Matrix<F> intertwiner_space(const F& f, const std::vector<Matrix<F>>& A, const std::vector<Matrix<F>>& B) {
  require(A.size() == B.size(), ErrorCode::DimensionMismatch, "generator lists differ in length");
  const std::size_t v = A.empty() ? 0 : A[0].rows();
  const std::size_t w = B.empty() ? 0 : B[0].rows();
  Matrix<F> sys(f, 0, w * v);
  std::vector<typename F::Elem> eq(w * v, f.zero());
  for (std::size_t g = 0; g < A.size(); ++g)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < v; ++j) {
        std::fill(eq.begin(), eq.end(), f.zero());
        for (std::size_t k = 0; k < w; ++k) eq[k * v + j] = f.add(eq[k * v + j], B[g](i, k));
        for (std::size_t k = 0; k < v; ++k) eq[i * v + k] = f.sub(eq[i * v + k], A[g](k, j));
        sys.append_row(eq);
      }
  return kernel_basis(std::move(sys));
}

template <class F>
std::size_t intertwiner_dimension(const F& f, const std::vector<Matrix<F>>& A, const std::vector<Matrix<F>>& B) {
  return intertwiner_space(f, A, B).rows();
}

template <class F>
std::size_t commutant_dimension(const F& f, const std::vector<Matrix<F>>& A) {
  return intertwiner_dimension(f, A, A);
}

inline bool is_modular(const GroupSpec& g, std::uint32_t p) { return g.order() % p == 0; }

struct Multiplicities {
  std::map<std::string, std::size_t> mult;
  std::size_t endo_dim = 0;
};

/// Multiplicity of each candidate irreducible in a representation V given by its
/// generator matrices, as dim Hom_G(mu, V). Refuses when p divides |G|.
template <class F>
Multiplicities character_multiplicities(const F& f, const GroupSpec& group, const std::vector<Matrix<F>>& V,
                                        const std::vector<GradedRep>& candidates) {
  require(!is_modular(group, f.characteristic()), ErrorCode::ModularCharacteristic,
          "p divides |G|; ordinary character theory does not apply");
  Multiplicities out;
  out.endo_dim = commutant_dimension(f, V);
  for (const auto& mu : candidates) {
    std::vector<Matrix<F>> M;
    for (const auto& g : mu.generator_matrices()) M.push_back(embed_matrix(f, g));
    const std::size_t h = intertwiner_dimension(f, M, V);
    if (h > 0) out.mult[mu.name()] = h;
  }
  return out;
}

/// Whether V and W are isomorphic: some combination of intertwiners is invertible.
template <class F>
bool isomorphic(const F& f, const std::vector<Matrix<F>>& V, const std::vector<Matrix<F>>& W, std::uint64_t seed = 7) {
  if (V.empty() || W.empty()) return V.size() == W.size();
  const std::size_t v = V[0].rows(), w = W[0].rows();
  if (v != w) return false;
  const Matrix<F> hom = intertwiner_space(f, V, W);
  if (hom.rows() == 0) return false;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix<F> X(f, w, v);
    for (std::size_t b = 0; b < hom.rows(); ++b) {
      const auto c = f.from_int(static_cast<std::int64_t>(rng() % 1000003));
      for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < v; ++j) X(i, j) = f.add(X(i, j), f.mul(c, hom(b, i * v + j)));
    }
    if (rank(X) == v) return true;
  }
  return false;
}

}  // namespace cherednik
