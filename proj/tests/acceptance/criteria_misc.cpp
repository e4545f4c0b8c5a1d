#include "cherednik/arrangements.hpp"
#include "cherednik/degeneration.hpp"
#include "cherednik/error.hpp"
#include "cherednik/oracles.hpp"
#include "cherednik/properties.hpp"
#include "cherednik/ratfunc.hpp"
#include "common.hpp"

namespace acceptance {

using namespace cherednik;

namespace {

Coeffs substitute(const Coeffs& a, int q) {
  if (a.empty()) return {};
  Coeffs out((a.size() - 1) * static_cast<std::size_t>(q) + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i * static_cast<std::size_t>(q)] = a[i];
  return out;
}

Outcome degeneration() {
  Outcome o{true, "", {}};
  for (auto [m, r, p] : {std::tuple{4, 2, 7u}, {6, 3, 5u}}) {
    const auto rep = verify_degeneration(m, r, 2, "trivial", p, 1, 20);
    const int q = m / r;
    Coeffs want = substitute(rep.h1, q);
    for (int k = 0; k < 2; ++k) want = mul(want, ones(q));
    const bool ok = rep.h == want && rep.lemma_checks == 20 && rep.lemma_failures == 0;
    o.pass = o.pass && ok;
    o.detail += "G(" + std::to_string(m) + "," + std::to_string(r) + ",2) p=" + std::to_string(p) + ": " + str(rep.h) +
                " vs h1(t^" + std::to_string(q) + ")[" + std::to_string(q) + "]^2, lemma " +
                std::to_string(rep.lemma_checks - rep.lemma_failures) + "/" + std::to_string(rep.lemma_checks) + "; ";
    if (!ok) o.analysis.push_back("want " + str(want) + ", h1 " + str(rep.h1));
  }
  return o;
}

Outcome invariant_oracles() {
  Outcome o{true, "", {}};
  const auto h0 = compute_L(make_engine(2, 1, 2, 7, "trivial", 0)).hilbert();
  const Coeffs want0 = mul(ones(2), ones(4));
  const auto h1 = compute_L(make_engine(2, 1, 2, 7, "trivial", 1)).hilbert();
  const Coeffs want1 = mul(ones(2 * 7), ones(4 * 7));
  std::int64_t total = 0;
  for (auto x : h1) total += x;
  bool remark_ok = true;
  for (int m : {3, 4}) {
    const auto h = compute_L(make_engine(m, m, 2, 7, "trivial")).hilbert();
    auto closed = closed_hilbert_trivial(m, m, 2, static_cast<int>(h.size()) + 2).coeffs;
    remark_ok = remark_ok && trim(closed) == h;
  }
  o.pass = h0 == want0 && h1 == want1 && remark_ok;
  o.detail = "hbar=0 " + str(h0) + "; hbar=1 series exact: " + (h1 == want1 ? "yes" : "no") + " (dimension " +
             std::to_string(total) + "); G(m,m,2) closed form for m=3,4: " + (remark_ok ? "yes" : "no");
  if (h0 != want0) o.analysis.push_back("hbar=0 want " + str(want0));
  if (h1 != want1) o.analysis.push_back("hbar=1 got " + str(h1));
  return o;
}

Outcome arrangements() {
  Outcome o{true, "", {}};
  const int N = 10;
  std::map<std::tuple<char, int, int, int>, std::vector<std::int64_t>> seen;
  int checked = 0, flat_failures = 0;
  for (int p : {5, 7, 101}) {
    const FiniteField F = FiniteField::prime(static_cast<std::uint32_t>(p));
    auto record = [&](char kind, int n, int i, int m, const std::vector<std::int64_t>& h, const GradedSeries& want) {
      ++checked;
      if (h != want.coeffs) {
        o.pass = false;
        o.analysis.push_back(std::string(1, kind) + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " m=" +
                             std::to_string(m) + " p=" + std::to_string(p) + ": " + str(h) + " vs " + str(want.coeffs));
      }
      auto [it, fresh] = seen.emplace(std::tuple{kind, n, i, m}, h);
      if (!fresh && it->second != h) ++flat_failures;
    };
    for (int n = 2; n <= 6; ++n)
      for (int i = 0; i <= 2; ++i) {
        for (int m = 1; m <= 2; ++m) {
          if (2 * i >= n || (n == 2 * i + 1 && i == 0)) continue;
          const auto I = ideal_I(F, i, m, n);
          record('I', n, i, m, I.hilbert(N), *I.oracle_series(N));
        }
        if (i >= 1) {
          const auto T = ideal_T(F, i, n);
          record('T', n, i, 1, T.hilbert(N), *T.oracle_series(N));
        }
      }
  }
  if (flat_failures) o.pass = false;
  o.detail = std::to_string(checked) + " Hilbert functions to degree 10 against closed forms; " +
             std::to_string(flat_failures) + " differ across p in {5, 7, 101}";
  return o;
}

Outcome dunkl_kill() {
  Outcome o{true, "", {}};
  for (auto [m, n, p, i] : {std::tuple{1, 3, 3, 0}, {1, 4, 3, 1}, {2, 4, 3, 1}, {1, 5, 3, 2}}) {
    const auto r = verify_dunkl_kill(m, n, p, i);
    o.pass = o.pass && r.killed() && r.generators > 0;
    o.detail += "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(i) +
                ") " + (r.killed() ? "killed" : "NOT killed") + "; ";
    if (!r.killed()) o.analysis.push_back("residual " + r.witness);
  }
  const auto bad = verify_dunkl_kill(1, 3, 3, 1, 1, true);
  bool refused = false;
  try {
    (void)verify_dunkl_kill(1, 3, 3, 1);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::CongruenceViolated;
  }
  o.pass = o.pass && !bad.killed() && refused;
  o.detail += "violated (1,3,3,1): " + std::to_string(bad.nonzero_images) + " nonzero images" +
              (refused ? ", refused without override" : ", NOT refused");
  return o;
}

void absorb(Outcome& o, std::size_t& checks, const std::string& where, const PropertyReport& r) {
  checks += r.checks;
  if (!r.ok()) {
    o.pass = false;
    o.analysis.push_back(where + " " + r.name + ": " + std::to_string(r.failures) + " failures, first at " +
                         r.first_failure);
  }
}

Outcome property_suites() {
  Outcome o{true, "", {}};
  std::size_t checks = 0;
  struct Case {
    int m, r, n;
    std::string tau;
    int hbar;
    std::uint32_t p;
  };
  const std::vector<Case> cases{{3, 3, 2, "rho:1", 0, 7},   {4, 4, 2, "rho:1", 0, 7}, {4, 2, 2, "trivial", 1, 7},
                                {2, 1, 2, "trivial", 1, 5}, {2, 2, 3, "gamma:0", 0, 7}, {3, 1, 2, "trivial", 0, 7},
                                {2, 2, 4, "specht:3,1", 0, 7}};
  int seed_disagreements = 0;
  for (const auto& c : cases) {
    const std::string where = "G(" + std::to_string(c.m) + "," + std::to_string(c.r) + "," + std::to_string(c.n) +
                              ") " + c.tau;
    const auto eng = make_engine(c.m, c.r, c.n, c.p, c.tau, c.hbar, 1);
    const int dmax = c.n >= 4 ? 2 : 4;
    absorb(o, checks, where, check_dunkl_commutation(*eng, dmax));
    absorb(o, checks, where, check_commutation_relation(*eng, dmax));
    absorb(o, checks, where, check_equivariance(*eng, dmax));
    const auto L = compute_L(eng);
    absorb(o, checks, where, check_submodule_closure(L));
    for (std::uint64_t seed : {2u, 3u})
      if (compute_L(make_engine(c.m, c.r, c.n, c.p, c.tau, c.hbar, seed)).hilbert() != L.hilbert()) {
        ++seed_disagreements;
        o.analysis.push_back(where + ": seed " + std::to_string(seed) + " disagrees with seed 1");
      }
  }
  int symbolic_disagreements = 0;
  for (int m : {3, 4})
    for (const auto& tau : dihedral_irreducibles(m)) {
      const GroupSpec G(m, m, 2);
      const FiniteField K = FiniteField::with_roots(7, m, 1, kGenericFieldSize);
      const auto R = parameter_field(G, K);
      auto eng = std::make_shared<VermaEngine<RationalFunctionField>>(G, builtin_rep(G, tau, K), R,
                                                                       symbolic_params(G, R, 0));
      const std::string where = "symbolic G(" + std::to_string(m) + "," + std::to_string(m) + ",2) " + tau;
      absorb(o, checks, where, check_dunkl_commutation(*eng, 3));
      absorb(o, checks, where, check_equivariance(*eng, 3));
      const auto Ls = compute_L(eng);
      const auto Lf = compute_L(make_engine(m, m, 2, 7, tau));
      if (Ls.hilbert() != Lf.hilbert()) {
        ++symbolic_disagreements;
        o.analysis.push_back(where + ": symbolic " + str(Ls.hilbert()) + " vs specialized " + str(Lf.hilbert()));
      }
    }
  o.pass = o.pass && seed_disagreements == 0 && symbolic_disagreements == 0;
  o.detail = std::to_string(checks) + " identity checks, " + std::to_string(o.analysis.size()) + " failures; " +
             std::to_string(seed_disagreements) + " seed and " + std::to_string(symbolic_disagreements) +
             " symbolic disagreements";
  return o;
}

}  // namespace

std::vector<Criterion> misc_criteria() {
  return {
      {"6", "degeneration G(m,r,2) to G(r,r,2)", degeneration},
      {"7", "invariant-degree closed forms", invariant_oracles},
      {"8", "arrangement ideals and flatness", arrangements},
      {"9", "Dunkl operators kill I_i^(m)", dunkl_kill},
      {"13", "property suites", property_suites},
  };
}

}  // namespace acceptance
