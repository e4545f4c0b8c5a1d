#include "cherednik/degeneration.hpp"

#include <memory>
#include <random>

#include <nlohmann/json.hpp>

#include "cherednik/lmodule.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rep.hpp"
#include "cherednik/series.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

FiniteField quotient_root_field(const FiniteField& f, int q) {
  require(q >= 1 && f.root_order() % q == 0, ErrorCode::IncompatibleGroup, "q must divide the root order");
  FieldSpec spec = f.spec();
  spec.m = f.root_order() / q;
  spec.xi = f.coefficients(f.xi_pow(q));
  spec.xi.resize(spec.k, 0);
  return FiniteField(spec);
}

Poly<FiniteField> rebase(const Poly<FiniteField>& p, const FiniteField& f) {
  Poly<FiniteField> out(f, p.nvars());
  for (const auto& [mon, c] : p.terms()) out.add_term(mon, c);
  return out;
}

namespace {

CherednikParams<FiniteField> matching_params(const GroupSpec& G, const GroupSpec& H,
                                             const CherednikParams<FiniteField>& pg) {
  CherednikParams<FiniteField> ph;
  ph.hbar = pg.hbar;
  for (const auto& label : H.class_labels()) ph.c.push_back(pg.c[G.class_index(label)]);
  return ph;
}

Poly<FiniteField> random_homogeneous(const FiniteField& f, int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coef(0, f.size() - 1);
  Poly<FiniteField> out(f, n);
  const MonomialBasis basis(n, d);
  for (const auto& mon : basis.monomials()) out.add_term(mon, coef(rng));
  return out;
}

}  // namespace

DegenerationReport verify_degeneration(int m, int r, int n, const std::string& tau, std::uint32_t p,
                                       std::uint64_t seed, int spot_checks, int max_degree) {
  require(r >= 1 && m % r == 0, ErrorCode::InvalidParameters, "r must divide m");
  DegenerationReport rep;
  rep.m = m;
  rep.r = r;
  rep.n = n;
  rep.p = static_cast<int>(p);
  rep.q = m / r;
  rep.tau = tau;

  const GroupSpec G(m, r, n), H(r, r, n);
  const FiniteField F = FiniteField::with_roots(p, m, seed, kGenericFieldSize);
  const FiniteField Fh = quotient_root_field(F, rep.q);
  const auto pg = specialized_params(G, F, 0, seed);
  auto eng = std::make_shared<VermaEngine<FiniteField>>(G, builtin_rep(G, "pullback:" + tau, F), F, pg);
  auto engh = std::make_shared<VermaEngine<FiniteField>>(H, builtin_rep(H, tau, Fh), Fh, matching_params(G, H, pg));

  const auto L = compute_L(eng);
  const auto Lh = compute_L(engh);
  require(L.status() == LStatus::Complete && Lh.status() == LStatus::Complete, ErrorCode::CapTooSmall,
          "L did not terminate below the degree cap");
  rep.h = L.hilbert();
  rep.h1 = Lh.hilbert();
  const IntPoly pred = IntPoly(rep.h1).substitute_power(rep.q) * IntPoly::geometric(rep.q).pow(n);
  rep.predicted = pred.c;
  rep.series_match = rep.predicted == rep.h;

  std::mt19937_64 rng(seed ^ 0x5deece66dULL);
  std::uniform_int_distribution<int> deg(1, max_degree), var(0, n - 1), comp(0, eng->tdim() - 1);
  const auto qf = F.from_int(rep.q);
  for (int k = 0; k < spot_checks; ++k) {
    const int d = deg(rng), i = var(rng), b = comp(rng);
    auto vh = VermaVector<FiniteField>::zero(Fh, n, engh->tdim());
    vh.comp[b] = random_homogeneous(Fh, n, d, rng);
    const auto g = engh->dunkl_apply(i, vh);
    auto v = VermaVector<FiniteField>::zero(F, n, eng->tdim());
    v.comp[b] = rebase(vh.comp[b], F).substitute_powers(rep.q);
    const auto lhs = eng->dunkl_apply(i, v);
    bool same = true;
    for (int c = 0; c < eng->tdim(); ++c) {
      const auto rhs = rebase(g.comp[c], F).substitute_powers(rep.q).times_monomial(Monomial::var(i, rep.q - 1), qf);
      if (!(rhs == lhs.comp[c])) same = false;
    }
    ++rep.lemma_checks;
    if (!same) ++rep.lemma_failures;
  }
  return rep;
}

void to_json(nlohmann::json& j, const DegenerationReport& r) {
  j = {{"m", r.m},           {"r", r.r},
       {"n", r.n},           {"p", r.p},
       {"q", r.q},           {"tau", r.tau},
       {"h1", r.h1},         {"h", r.h},
       {"predicted", r.predicted}, {"seriesMatch", r.series_match},
       {"lemmaChecks", r.lemma_checks}, {"lemmaFailures", r.lemma_failures},
       {"ok", r.ok()}};
}

}  // namespace cherednik
