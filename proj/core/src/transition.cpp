#include "cherednik/transition.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cherednik/lmodule.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rep.hpp"
#include "cherednik/rep_theory.hpp"
#include "cherednik/resolutions.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

namespace {

Matrix<FiniteField> kron(const FiniteField& f, const Matrix<FiniteField>& A, const Matrix<FiniteField>& B) {
  Matrix<FiniteField> K(f, A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (f.is_zero(A(i, j))) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l) K(i * B.rows() + k, j * B.cols() + l) = f.mul(A(i, j), B(k, l));
    }
  return K;
}

Matrix<FiniteField> dense_columns(const FiniteField& f, const std::vector<SparseVec<FiniteField>>& cols) {
  Matrix<FiniteField> M(f, cols.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) M(r, c) = v;
  return M;
}

}  // namespace

std::size_t TransitionMatrix::index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  require(it != labels.end(), ErrorCode::UnknownName, "no representation " + label + " in the transition matrix");
  return static_cast<std::size_t>(it - labels.begin());
}

std::string TransitionMatrix::to_string() const {
  std::vector<std::vector<std::string>> cells(labels.size() + 1, std::vector<std::string>(labels.size() + 1));
  for (std::size_t c = 0; c < labels.size(); ++c) cells[0][c + 1] = "L(" + labels[c] + ")";
  for (std::size_t r = 0; r < labels.size(); ++r) {
    cells[r + 1][0] = "M(" + labels[r] + ")";
    for (std::size_t c = 0; c < labels.size(); ++c) cells[r + 1][c + 1] = entries[r][c].is_zero() ? "." : entries[r][c].to_string();
  }
  std::vector<std::size_t> width(labels.size() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
    os << "\n";
  }
  return os.str();
}

void to_json(nlohmann::json& j, const TransitionMatrix& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.c);
    rows.push_back(r);
  }
  j = {{"m", t.m}, {"p", t.p}, {"labels", t.labels}, {"entries", rows}, {"convention", t.convention}};
}

std::map<std::string, std::int64_t> decompose(const FiniteField& f, const GroupSpec& group,
                                              const std::vector<Matrix<FiniteField>>& gens,
                                              const std::vector<std::string>& irreducibles) {
  std::map<std::string, std::int64_t> out;
  if (gens.empty() || gens[0].rows() == 0) return out;
  std::vector<GradedRep> cands;
  for (const auto& name : irreducibles) cands.push_back(builtin_rep(group, name, f));
  const auto mu = character_multiplicities(f, group, gens, cands);
  std::size_t total = 0;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    auto it = mu.mult.find(cands[k].name());
    if (it == mu.mult.end()) continue;
    out[irreducibles[k]] = static_cast<std::int64_t>(it->second);
    total += it->second * static_cast<std::size_t>(cands[k].dim());
  }
  require(total == gens[0].rows(), ErrorCode::SolveFailure, "the candidate irreducibles do not exhaust the representation");
  return out;
}

TransitionMatrix transition_matrix(int m, std::uint32_t p, std::uint64_t seed) {
  require(m >= 2, ErrorCode::InvalidParameters, "dihedral transition matrices need m >= 2");
  const GroupSpec G(m, m, 2);
  require(p != 2 && m % p != 0, ErrorCode::CharacteristicDividesM, "p must not divide 2m");
  const FiniteField F = FiniteField::with_roots(p, m, seed, kGenericFieldSize);
  TransitionMatrix T;
  T.m = m;
  T.p = p;
  T.labels = dihedral_irreducibles(m);
  T.convention =
      "rho:0 trivial; rho:-3 sign; rho:-2 sends s_12^k to (-1)^k; rho:-1 sends s_12^k to -(-1)^k; "
      "entries a(row, col) satisfy [L(col)] = sum a(row, col)(t) [M(row)]";
  const std::size_t N = T.labels.size();
  T.entries.assign(N, std::vector<IntPoly>(N));
  const auto params = specialized_params(G, F, 0, seed);
  const auto gens = G.generators();
  for (std::size_t col = 0; col < N; ++col) {
    auto eng = std::make_shared<VermaEngine<FiniteField>>(G, builtin_rep(G, T.labels[col], F), F, params);
    const auto L = compute_L(eng);
    require(L.status() == LStatus::Complete, ErrorCode::CapTooSmall, "L(" + T.labels[col] + ") did not terminate");
    GradedCharacter ch;
    std::map<std::string, std::vector<std::int64_t>> coeff;
    for (int d = 0; d <= L.top_degree(); ++d) {
      std::vector<Matrix<FiniteField>> Ld;
      for (const auto& g : gens) Ld.push_back(L.group_map(g, d));
      ch.push_back(decompose(F, G, Ld, T.labels));
      for (int i = 0; i <= 2; ++i) {
        std::vector<Matrix<FiniteField>> V;
        for (std::size_t k = 0; k < gens.size(); ++k) V.push_back(kron(F, exterior_action(F, gens[k], i), Ld[k]));
        for (const auto& [name, mult] : decompose(F, G, V, T.labels)) {
          auto& c = coeff[name];
          if (static_cast<int>(c.size()) <= d + i) c.resize(d + i + 1, 0);
          c[d + i] += i % 2 ? -mult : mult;
        }
      }
    }
    for (const auto& [name, c] : coeff) T.entries[T.index(name)][col] = IntPoly(c);
    T.simple_characters.push_back(std::move(ch));
  }
  return T;
}

GradedCharacter verma_character(int m, std::uint32_t p, const std::string& rho, int dmax, std::uint64_t seed) {
  const GroupSpec G(m, m, 2);
  const FiniteField F = FiniteField::with_roots(p, m, seed, kGenericFieldSize);
  const VermaEngine<FiniteField> eng(G, builtin_rep(G, rho, F), F, specialized_params(G, F, 0, seed));
  const auto names = dihedral_irreducibles(m);
  GradedCharacter ch;
  for (int d = 0; d <= dmax; ++d) {
    std::vector<Matrix<FiniteField>> V;
    for (const auto& g : G.generators()) V.push_back(dense_columns(F, eng.act_slice(g, d)));
    ch.push_back(decompose(F, G, V, names));
  }
  return ch;
}

bool reproduces_simple_characters(const TransitionMatrix& t, int dmax, std::uint64_t seed) {
  std::vector<GradedCharacter> verma;
  for (const auto& rho : t.labels) verma.push_back(verma_character(t.m, t.p, rho, dmax, seed));
  for (std::size_t col = 0; col < t.labels.size(); ++col)
    for (int d = 0; d <= dmax; ++d) {
      std::map<std::string, std::int64_t> sum;
      for (std::size_t row = 0; row < t.labels.size(); ++row) {
        const IntPoly& a = t.entries[row][col];
        for (int k = 0; k <= std::min(d, a.degree()); ++k) {
          if (a[k] == 0) continue;
          for (const auto& [name, mult] : verma[row][d - k]) sum[name] += a[k] * mult;
        }
      }
      std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
      const auto& ch = t.simple_characters[col];
      const std::map<std::string, std::int64_t> want = d < static_cast<int>(ch.size()) ? ch[d] : std::map<std::string, std::int64_t>{};
      if (sum != want) return false;
    }
  return true;
}

}  // namespace cherednik
