#include "cherednik/resolutions.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace cherednik {

std::vector<std::vector<int>> subsets(int n, int i) {
  std::vector<std::vector<int>> out;
  if (i < 0 || i > n) return out;
  std::vector<int> cur(i);
  for (int k = 0; k < i; ++k) cur[k] = k;
  while (true) {
    out.push_back(cur);
    int k = i - 1;
    while (k >= 0 && cur[k] == n - i + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int l = k + 1; l < i; ++l) cur[l] = cur[l - 1] + 1;
  }
  return out;
}

Matrix<FiniteField> exterior_action(const FiniteField& f, const GroupElement& g, int i) {
  const int n = g.rank();
  const auto S = subsets(n, i);
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t k = 0; k < S.size(); ++k) pos[S[k]] = k;
  Matrix<FiniteField> out(f, S.size(), S.size());
  for (std::size_t k = 0; k < S.size(); ++k) {
    std::vector<int> img;
    int e = 0;
    for (int s : S[k]) {
      img.push_back(g.perm[s]);
      e += g.exps[s];
    }
    int inversions = 0;
    for (std::size_t a = 0; a < img.size(); ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b)
        if (img[a] > img[b]) ++inversions;
    std::sort(img.begin(), img.end());
    const auto c = f.xi_pow(e);
    out(pos.at(img), k) = inversions % 2 ? f.neg(c) : c;
  }
  return out;
}

std::vector<std::int64_t> BettiTable::ranks() const {
  std::vector<std::int64_t> r;
  for (const auto& [ij, b] : beta) {
    if (static_cast<int>(r.size()) <= ij.first) r.resize(ij.first + 1, 0);
    r[ij.first] += b;
  }
  return r;
}

int BettiTable::pdim() const { return static_cast<int>(ranks().size()) - 1; }

IntPoly BettiTable::alternating_sum() const {
  IntPoly p;
  for (const auto& [ij, b] : beta) p = p + IntPoly::monomial(ij.second, ij.first % 2 ? -b : b);
  return p;
}

std::string BettiTable::to_string() const {
  int maxrow = 0, maxcol = 0;
  for (const auto& [ij, b] : beta) {
    maxrow = std::max(maxrow, ij.second - ij.first);
    maxcol = std::max(maxcol, ij.first);
  }
  std::ostringstream os;
  const int w = 6;
  os << std::string(w, ' ');
  for (int i = 0; i <= maxcol; ++i) {
    std::string s = std::to_string(i);
    os << std::string(w - s.size(), ' ') << s;
  }
  os << "\ntotal:";
  for (auto r : ranks()) {
    std::string s = std::to_string(r);
    os << std::string(w - s.size(), ' ') << s;
  }
  os << "\n";
  for (int row = 0; row <= maxrow; ++row) {
    std::string label = std::to_string(row) + ":";
    os << std::string(w - label.size(), ' ') << label;
    for (int i = 0; i <= maxcol; ++i) {
      const auto b = (*this)(i, i + row);
      std::string s = b ? std::to_string(b) : ".";
      os << std::string(w - s.size(), ' ') << s;
    }
    os << "\n";
  }
  if (!complete) os << "(computed through internal degree " << bound << ")\n";
  return os.str();
}

void to_json(nlohmann::json& j, const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ij, b] : t.beta) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
  j = {{"nvars", t.nvars}, {"bound", t.bound}, {"complete", t.complete}, {"ranks", t.ranks()}, {"beta", entries}};
}

std::vector<Matrix<FiniteField>> tor_action(const GradedModuleView<FiniteField>& M, const GroupSpec& group, int i,
                                            int j) {
  require(static_cast<bool>(M.act), ErrorCode::UnsupportedCase, "module carries no group action");
  const FiniteField& f = M.field;
  const Matrix<FiniteField> Z = kernel_basis(detail::koszul_differential(M, i, j));
  Matrix<FiniteField> B = detail::koszul_differential(M, i + 1, j).transpose();
  rref(B);
  const std::size_t N = Z.cols();
  EchelonSpace<FiniteField> span(f, N);
  for (std::size_t r = 0; r < B.rows(); ++r) span.insert(std::vector<FiniteField::Elem>(B.row(r).begin(), B.row(r).end()));
  std::vector<std::vector<FiniteField::Elem>> H;
  for (std::size_t r = 0; r < Z.rows(); ++r) {
    std::vector<FiniteField::Elem> z(Z.row(r).begin(), Z.row(r).end());
    if (span.insert(z)) H.push_back(std::move(z));
  }
  const std::size_t h = H.size(), b = B.rows();
  Matrix<FiniteField> basis(f, N, b + h);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < N; ++c) basis(c, r) = B(r, c);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < N; ++c) basis(c, b + r) = H[r][c];

  std::vector<Matrix<FiniteField>> out;
  const std::size_t a = M.dim(j - i);
  for (const auto& g : group.generators()) {
    const auto W = exterior_action(f, g, i);
    const auto A = M.act(g, j - i);
    Matrix<FiniteField> act(f, h, h);
    for (std::size_t k = 0; k < h; ++k) {
      std::vector<FiniteField::Elem> img(N, f.zero());
      for (std::size_t s = 0; s < W.cols(); ++s)
        for (std::size_t c = 0; c < a; ++c) {
          const auto x = H[k][s * a + c];
          if (f.is_zero(x)) continue;
          for (std::size_t s2 = 0; s2 < W.rows(); ++s2) {
            if (f.is_zero(W(s2, s))) continue;
            const auto wx = f.mul(W(s2, s), x);
            for (std::size_t c2 = 0; c2 < a; ++c2)
              img[s2 * a + c2] = f.add(img[s2 * a + c2], f.mul(wx, A(c2, c)));
          }
        }
      const auto coords = solve(basis, img);
      require(coords.has_value(), ErrorCode::NotGStable, "Koszul cycles are not stable under the group");
      for (std::size_t r = 0; r < h; ++r) act(r, k) = (*coords)[b + r];
    }
    out.push_back(std::move(act));
  }
  return out;
}

std::map<std::pair<int, int>, Multiplicities> equivariant_betti(const GradedModuleView<FiniteField>& M,
                                                               const GroupSpec& group,
                                                               const std::vector<GradedRep>& irreducibles,
                                                               const BettiTable& table) {
  std::map<std::pair<int, int>, Multiplicities> out;
  for (const auto& [ij, b] : table.beta)
    out[ij] = character_multiplicities(M.field, group, tor_action(M, group, ij.first, ij.second), irreducibles);
  return out;
}

DualityReport check_duality(const BettiTable& table, int codim) {
  require(table.complete, ErrorCode::IncompleteTable, "Betti table is not complete");
  const auto r = table.ranks();
  require(table.pdim() == codim, ErrorCode::IncompleteTable,
          "projective dimension " + std::to_string(table.pdim()) + " differs from codimension " +
              std::to_string(codim));
  DualityReport rep;
  rep.gorenstein = r[codim] == 1;
  int degrees = 0;
  for (const auto& [ij, b] : table.beta)
    if (ij.first == codim && b != 0) ++degrees;
  rep.level = degrees == 1;
  rep.palindromic = true;
  for (int i = 0; i <= codim; ++i)
    if (r[i] != r[codim - i]) rep.palindromic = false;
  return rep;
}

void to_json(nlohmann::json& j, const DualityReport& r) {
  j = {{"gorenstein", r.gorenstein}, {"level", r.level}, {"palindromic", r.palindromic}};
}

}  // namespace cherednik
