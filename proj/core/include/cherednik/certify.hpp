#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/lmodule.hpp"
#include "cherednik/rep_theory.hpp"

namespace cherednik {

/// Outcome of the three-condition irreducibility test on a finite graded quotient N of M(tau).
struct Certificate {
  int top_degree = -1;
  std::vector<std::size_t> socle_dims;
  bool socle_top = false;
  std::optional<bool> socle_irreducible;
  std::size_t endo_dim = 0;
  bool beta_nonzero = false;
  int witness_degree = -1;
  std::vector<int> witness_word;
  int witness_component = -1;
  std::string witness_value;
  bool dunkl_stable = false;

  bool certified() const { return socle_top && socle_irreducible.value_or(false) && beta_nonzero; }
};

void to_json(nlohmann::json& j, const Certificate& c);

/// Socle of N as a Sym(h*)-module in degree d, as rows in quotient coordinates.
template <class F>
Matrix<F> socle_slice(const VermaQuotient<F>& N, int d) {
  const F& f = N.field();
  const std::size_t q = N.qdim(d), qn = N.qdim(d + 1);
  Matrix<F> stacked(f, static_cast<std::size_t>(N.engine().n()) * qn, q);
  for (int j = 0; j < N.engine().n(); ++j) {
    const Matrix<F> m = N.mul_map(j, d);
    for (std::size_t r = 0; r < qn; ++r)
      for (std::size_t c = 0; c < q; ++c) stacked(static_cast<std::size_t>(j) * qn + r, c) = m(r, c);
  }
  return kernel_basis(std::move(stacked));
}

/// Checks: (1) socle in top degree; (2) socle irreducible (commutant of dimension 1);
/// (3) beta(v, -) nonzero for some socle vector v. When allow_modular is false and p | |G|,
/// condition (2) throws ModularCharacteristic; otherwise it is left unset.
template <class F>
Certificate certify_irreducible(const VermaQuotient<F>& N, bool allow_modular = false) {
  const F& f = N.field();
  const auto& eng = N.engine();
  require(N.finite(), ErrorCode::CapTooSmall, "quotient is not known to vanish above its top degree");
  Certificate cert;
  cert.top_degree = N.top_degree();
  std::vector<Matrix<F>> socles;
  for (int d = 0; d <= cert.top_degree; ++d) {
    socles.push_back(socle_slice(N, d));
    cert.socle_dims.push_back(socles.back().rows());
  }
  cert.socle_top = true;
  for (int d = 0; d < cert.top_degree; ++d)
    if (cert.socle_dims[d] != 0) cert.socle_top = false;

  if (is_modular(eng.group(), eng.base_field().characteristic())) {
    require(allow_modular, ErrorCode::ModularCharacteristic, "p divides |G|; socle irreducibility not decided");
  } else {
    std::size_t total = 0;
    for (auto s : cert.socle_dims) total += s;
    std::vector<Matrix<F>> action;
    for (const auto& g : eng.group().generators()) {
      Matrix<F> block(f, total, total);
      std::size_t off = 0;
      for (int d = 0; d <= cert.top_degree; ++d) {
        if (cert.socle_dims[d] == 0) continue;
        const auto m = subspace_action(std::vector<Matrix<F>>{N.group_map(g, d)}, socles[d]).front();
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) block(off + i, off + j) = m(i, j);
        off += m.rows();
      }
      action.push_back(std::move(block));
    }
    cert.endo_dim = commutant_dimension(f, action);
    cert.socle_irreducible = cert.endo_dim == 1;
  }

  for (int d = cert.top_degree; d >= 0 && !cert.beta_nonzero; --d) {
    for (std::size_t k = 0; k < socles[d].rows() && !cert.beta_nonzero; ++k) {
      std::vector<std::pair<std::vector<typename F::Elem>, std::vector<int>>> level;
      level.emplace_back(N.slice(d).lift(socles[d].row(k)), std::vector<int>{});
      for (int deg = d; deg > 0 && !level.empty(); --deg) {
        EchelonSpace<F> span(f, eng.slice_dim(deg - 1));
        std::vector<std::pair<std::vector<typename F::Elem>, std::vector<int>>> next;
        for (const auto& [vec, word] : level)
          for (int i = 0; i < eng.n(); ++i) {
            auto img = eng.dunkl_dense(i, deg, vec);
            if (span.insert(img)) {
              auto w = word;
              w.push_back(i);
              next.emplace_back(std::move(img), std::move(w));
            }
          }
        level = std::move(next);
      }
      for (const auto& [vec, word] : level) {
        for (std::size_t b = 0; b < vec.size(); ++b)
          if (!f.is_zero(vec[b])) {
            cert.beta_nonzero = true;
            cert.witness_degree = d;
            cert.witness_word = word;
            cert.witness_component = static_cast<int>(b);
            cert.witness_value = f.to_string(vec[b]);
            break;
          }
        if (cert.beta_nonzero) break;
      }
    }
  }
  cert.dunkl_stable = N.is_dunkl_stable();
  return cert;
}

}  // namespace cherednik
