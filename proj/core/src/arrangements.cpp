#include "cherednik/arrangements.hpp"

#include <memory>

#include <nlohmann/json.hpp>

#include "cherednik/params.hpp"
#include "cherednik/rep.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

std::string to_string(ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::I: return "I";
    case ArrangementKind::T: return "T";
    case ArrangementKind::JPDividesN: return "J-pdividesn";
    case ArrangementKind::JPNotDividesN: return "J-pnotdividesn";
  }
  return "?";
}

IntPoly arrangement_numerator(int i, int n) {
  IntPoly num;
  const int last = n >= 2 * i + 2 ? i : i + 1;
  for (int j = 0; j <= last; ++j) num = num + IntPoly::monomial(j, static_cast<std::int64_t>(binomial(n - i + j - 2, j)));
  if (n >= 2 * i + 2) num = num + IntPoly::monomial(i + 1, static_cast<std::int64_t>(binomial(n - 1, i - 1)));
  return num;
}

DunklKillReport verify_dunkl_kill(int m, int n, int p, int i, std::uint64_t seed, bool allow_violation) {
  DunklKillReport rep;
  rep.m = m;
  rep.n = n;
  rep.p = p;
  rep.i = i;
  rep.congruence_holds = i >= 0 && i < p && (n - i) % p == 0;
  require(rep.congruence_holds || allow_violation, ErrorCode::CongruenceViolated,
          "n = " + std::to_string(n) + " is not congruent to i = " + std::to_string(i) + " mod " + std::to_string(p));
  const GroupSpec G(m, 1, n);
  const FiniteField F = FiniteField::with_roots(p, m, seed, kGenericFieldSize);
  VermaEngine<FiniteField> eng(G, builtin_rep(G, "trivial", F), F, specialized_params(G, F, 0, seed));
  const auto I = ideal_I(F, i, m, n);
  rep.generators = I.generators.size();
  for (const auto& g : I.generators) {
    auto v = VermaVector<FiniteField>::zero(F, n, 1);
    v.comp[0] = g;
    for (int j = 0; j < n; ++j) {
      const auto img = eng.dunkl_apply(j, v);
      if (img.is_zero()) continue;
      if (rep.nonzero_images == 0)
        rep.witness = "D_" + std::to_string(j + 1) + "(" + g.to_string() + ") = " + img.comp[0].to_string();
      ++rep.nonzero_images;
    }
  }
  return rep;
}

void to_json(nlohmann::json& j, const DunklKillReport& r) {
  j = {{"m", r.m},
       {"n", r.n},
       {"p", r.p},
       {"i", r.i},
       {"congruenceHolds", r.congruence_holds},
       {"generators", r.generators},
       {"nonzeroImages", r.nonzero_images},
       {"killed", r.killed()}};
  if (!r.witness.empty()) j["witness"] = r.witness;
}

}  // namespace cherednik
