#include <fstream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cherednik/certify.hpp"
#include "cherednik/groebner.hpp"
#include "cherednik/arrangements.hpp"
#include "cherednik/resolutions.hpp"
#include "cherednik/transition.hpp"
#include "common.hpp"

namespace acceptance {

using namespace cherednik;

namespace {

Outcome dihedral_trivial() {
  Outcome o{true, "", {}};
  for (auto [m, p] : {std::pair{3, 5u}, {4, 7u}, {5, 7u}, {6, 5u}}) {
    const Stopwatch clock;
    const auto L = compute_L(make_engine(m, m, 2, p, "trivial"));
    const auto cert = certify_irreducible(L);
    const double secs = clock.seconds();
    const Coeffs want = mul({1, 1}, ones(m));
    const bool ok = L.hilbert() == want && cert.socle_top && cert.socle_irreducible.value_or(false) &&
                    cert.beta_nonzero && secs < 1.0;
    o.pass = o.pass && ok;
    o.detail += "m=" + std::to_string(m) + " p=" + std::to_string(p) + " " + str(L.hilbert()) +
                (ok ? " certified; " : " FAILED; ");
    if (!ok)
      o.analysis.push_back("m=" + std::to_string(m) + ": want " + str(want) + ", socle top " +
                           std::to_string(cert.socle_top) + ", irreducible " +
                           std::to_string(cert.socle_irreducible.value_or(false)) + ", beta " +
                           std::to_string(cert.beta_nonzero) + ", " + std::to_string(secs) + " s (limit 1 s)");
  }
  return o;
}

Outcome dihedral_rho_series() {
  struct Case {
    int m;
    std::string rho;
    Coeffs want;
  };
  const std::vector<Case> cases{
      {3, "rho:1", {2, 2, 2}},  {5, "rho:1", {2, 2, 2}},  {6, "rho:1", {2, 2, 2}},  {4, "rho:1", {2, 4, 2}},
      {8, "rho:2", {2}},        {10, "rho:2", {2}},       {10, "rho:3", {2}},       {6, "rho:2", {2, 2, 2}},
      {8, "rho:3", {2, 2, 2}},  {10, "rho:4", {2, 2, 2}},
  };
  Outcome o{true, "", {}};
  int good = 0;
  for (const auto& c : cases) {
    const std::uint32_t p = (2 * c.m) % 7 == 0 ? 11 : 7;
    const auto h = compute_L(make_engine(c.m, c.m, 2, p, c.rho)).hilbert();
    if (h == c.want) {
      ++good;
    } else {
      o.pass = false;
      o.analysis.push_back("m=" + std::to_string(c.m) + " " + c.rho + ": got " + str(h) + ", want " + str(c.want));
    }
  }
  o.detail = std::to_string(good) + "/" + std::to_string(cases.size()) + " series exact";
  return o;
}

struct Shape {
  int m;
  std::string rho;
  std::uint32_t p;
  std::map<std::pair<int, int>, std::int64_t> beta;
  /// Expected irreducible content of Tor_i(L)_j where stated.
  std::map<std::pair<int, int>, std::map<std::string, std::size_t>> content;
};

Outcome betti_shapes() {
  const std::vector<Shape> shapes{
      {3, "rho:0", 11, {{{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}}, {}},
      {5, "rho:0", 11, {{{0, 0}, 1}, {{1, 2}, 1}, {{1, 5}, 1}, {{2, 7}, 1}}, {}},
      {5, "rho:1", 11, {{{0, 0}, 2}, {{1, 1}, 2}, {{1, 3}, 2}, {{2, 4}, 2}},
       {{{1, 1}, {{"rho:2", 1}}}, {{1, 3}, {{"rho:2", 1}}}, {{2, 4}, {{"rho:1", 1}}}}},
      {6, "rho:1", 13, {{{0, 0}, 2}, {{1, 1}, 2}, {{1, 3}, 2}, {{2, 4}, 2}},
       {{{1, 1}, {{"rho:2", 1}}}, {{1, 3}, {{"rho:2", 1}}}, {{2, 4}, {{"rho:1", 1}}}}},
      {8, "rho:2", 17, {{{0, 0}, 2}, {{1, 1}, 4}, {{2, 2}, 2}},
       {{{1, 1}, {{"rho:1", 1}, {"rho:3", 1}}}, {{2, 2}, {{"rho:2", 1}}}}},
      {4, "rho:1", 13, {{{0, 0}, 2}, {{1, 2}, 4}, {{2, 4}, 2}}, {}},
      {6, "rho:2", 13, {{{0, 0}, 2}, {{1, 1}, 2}, {{1, 3}, 2}, {{2, 4}, 2}}, {}},
      {8, "rho:3", 17, {{{0, 0}, 2}, {{1, 1}, 2}, {{1, 3}, 2}, {{2, 4}, 2}}, {}},
      {3, "rho:1", 13, {{{0, 0}, 2}, {{1, 1}, 2}, {{1, 3}, 2}, {{2, 4}, 2}}, {}},
  };
  Outcome o{true, "", {}};
  int good = 0;
  for (const auto& s : shapes) {
    const auto L = compute_L(make_engine(s.m, s.m, 2, s.p, s.rho));
    const auto V = module_view(L);
    const auto T = graded_betti(V, 40);
    bool ok = T.complete && T.beta == s.beta;
    if (ok && !s.content.empty()) {
      std::vector<GradedRep> irr;
      for (const auto& name : dihedral_irreducibles(s.m)) irr.push_back(builtin_rep(L.engine().group(), name, L.field()));
      const auto eq = equivariant_betti(V, L.engine().group(), irr, T);
      for (const auto& [ij, want] : s.content) {
        std::map<std::string, std::size_t> got;
        for (const auto& [name, k] : eq.at(ij).mult)
          if (k) got[name] = k;
        if (got != want) {
          ok = false;
          o.analysis.push_back("m=" + std::to_string(s.m) + " " + s.rho + ": Tor content at (" +
                               std::to_string(ij.first) + "," + std::to_string(ij.second) + ") differs");
        }
      }
    }
    if (ok) {
      ++good;
    } else {
      o.pass = false;
      o.analysis.push_back("m=" + std::to_string(s.m) + " " + s.rho + " table:\n" + T.to_string());
    }
  }
  const FiniteField F = FiniteField::prime(7);
  const auto X = ideal_I(F, 1, 1, 4);
  const GroebnerQuotient<FiniteField> QX(ideal_groebner(F, 4, X.generators));
  const auto TX = graded_betti(module_view(QX, 12), 12);
  const auto dX = check_duality(TX, 4 - 1 - 1);
  const auto ranks = TX.ranks();
  const bool gor = dX.gorenstein && dX.palindromic && !ranks.empty() && ranks.back() == 1;
  const auto Tq = ideal_T(F, 2, 4);
  const GroebnerQuotient<FiniteField> QT(ideal_groebner(F, 4, Tq.generators));
  const auto TT = graded_betti(module_view(QT, 12), 12);
  const bool level = check_duality(TT, 4 - 2 + 1).level;
  if (!gor) o.analysis.push_back("X_1^(1), n=4 not certified Gorenstein:\n" + TX.to_string());
  if (!level) o.analysis.push_back("T(2,4) not certified level:\n" + TT.to_string());
  o.pass = o.pass && gor && level;
  o.detail = std::to_string(good) + "/" + std::to_string(shapes.size()) + " dihedral tables; X_1^(1) n=4 " +
             (gor ? "Gorenstein" : "NOT Gorenstein") + "; T(2,4) " + (level ? "level" : "NOT level");
  return o;
}

struct Fixture {
  int m = 0;
  std::string source;
  std::vector<std::string> labels;
  std::map<std::pair<std::string, std::string>, IntPoly> entries;

  IntPoly at(const std::string& row, const std::string& col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? IntPoly{} : it->second;
  }
};

Fixture load_transition(int m) {
  std::ifstream in(fixture_path("transition_m" + std::to_string(m) + ".json"));
  const auto j = nlohmann::json::parse(in);
  Fixture fx;
  fx.m = j.at("m");
  fx.source = j.at("source");
  fx.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& e : j.at("entries"))
    fx.entries[{fx.labels.at(e.at("row").get<int>() - 1), fx.labels.at(e.at("col").get<int>() - 1)}] =
        IntPoly(e.at("coeffs").get<std::vector<std::int64_t>>());
  return fx;
}

Outcome transition_tables() {
  const std::vector<std::pair<int, std::uint32_t>> cases{{2, 5}, {3, 5}, {4, 7}, {6, 5}, {8, 7}, {7, 11}, {10, 11}};
  Outcome o{true, "", {}};
  int exact = 0, disputed_cols = 0;
  for (auto [m, p] : cases) {
    const Fixture fx = load_transition(m);
    const auto T = transition_matrix(m, p);
    const bool closed_form = fx.source == "closed form";
    const int trunc = m + 4;
    const std::string twisted = (m % 2 == 0 && m >= 6) ? "rho:" + std::to_string(m / 2 - 1) : "";
    bool ok = fx.labels == T.labels, twisted_differs = false;
    std::vector<std::string> diffs;
    for (const auto& col : fx.labels)
      for (const auto& row : fx.labels) {
        IntPoly want = fx.at(row, col), got = T(row, col);
        if (closed_form) {
          want = want.truncated(trunc);
          got = got.truncated(trunc);
        }
        if (want == got) continue;
        diffs.push_back("m=" + std::to_string(m) + " a(" + row + ", " + col + "): computed " + got.to_string() +
                        ", reference " + want.to_string());
        if (col != twisted) ok = false;
        else twisted_differs = true;
      }
    const bool self_consistent = reproduces_simple_characters(T, m + 4);
    ok = ok && self_consistent;
    if (ok) ++exact;
    if (twisted_differs) {
      ++disputed_cols;
      TransitionMatrix R = T;
      const std::size_t c = T.index(twisted);
      for (const auto& row : fx.labels) R.entries[T.index(row)][c] = fx.at(row, twisted);
      const bool reference_consistent = reproduces_simple_characters(R, m + 4);
      o.analysis.push_back("m=" + std::to_string(m) + " column " + twisted + ": computed column reproduces ch L(" +
                           twisted + ") through degree " + std::to_string(m + 4) + ": " +
                           (self_consistent ? "yes" : "no") + "; reference column reproduces it: " +
                           (reference_consistent ? "yes" : "no"));
    }
    for (auto& d : diffs) o.analysis.push_back(d);
    if (!ok) o.pass = false;
  }
  o.analysis.insert(o.analysis.begin(),
                    "every column except rho:{m/2-1} for even m >= 6 agrees with the reference exactly; in that column "
                    "the reference entries have the same Hilbert series but not the same graded character, and "
                    "substituting them breaks [L] = sum a [M] (checked below)");
  o.detail = std::to_string(exact) + "/" + std::to_string(cases.size()) + " matrices match outside the rho:{m/2-1} column";
  if (disputed_cols) {
    o.pass = false;
    o.detail += "; " + std::to_string(disputed_cols) + " reference rho:{m/2-1} columns disagree with the computation";
  }
  return o;
}

}  // namespace

std::vector<Criterion> dihedral_criteria() {
  return {
      {"1", "dihedral trivial series and irreducibility certificate", dihedral_trivial},
      {"2", "dihedral rho_i series", dihedral_rho_series},
      {"10", "dihedral Betti shapes, Gorenstein X_1^(1), level T(2,4)", betti_shapes},
      {"12", "transition matrices of G(m,m,2)", transition_tables},
  };
}

}  // namespace acceptance
