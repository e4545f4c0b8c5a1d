#include "cherednik/rep.hpp"

#include <deque>
#include <random>

#include "cherednik/error.hpp"

namespace cherednik {

GradedRep::GradedRep(std::string name, int dim, std::vector<std::string> labels, FiniteField field, GroupSpec group,
                     Eval eval)
    : name_(std::move(name)),
      dim_(dim),
      labels_(std::move(labels)),
      field_(std::move(field)),
      group_(std::move(group)),
      eval_(std::make_shared<const Eval>(std::move(eval))) {
  if (labels_.empty())
    for (int i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
}

std::vector<FMatrix> GradedRep::generator_matrices() const {
  std::vector<FMatrix> out;
  for (const auto& g : group_.generators()) out.push_back(matrix(g));
  return out;
}

bool GradedRep::is_homomorphism(std::uint64_t seed, int samples) const {
  const auto elems = group_.elements();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int s = 0; s < samples; ++s) {
    const auto& g = elems[pick(rng)];
    const auto& h = elems[pick(rng)];
    if (!(matrix(compose(g, h, group_.m())) == matrix(g) * matrix(h))) return false;
  }
  return matrix(GroupElement::identity(group_.n())) == FMatrix::identity(field_, dim_);
}

namespace {

FMatrix scalar_matrix(const FiniteField& f, FiniteField::Elem c) {
  FMatrix a(f, 1, 1);
  a(0, 0) = c;
  return a;
}

std::map<std::vector<int>, FMatrix> specht_matrices(const Partition& lambda, const FiniteField& f) {
  const int n = partition_size(lambda);
  const auto tableaux = standard_tableaux(lambda);
  const int d = static_cast<int>(tableaux.size());
  const MonomialBasis mons(n, n_lambda(lambda));
  std::vector<Poly<FiniteField>> polys;
  FMatrix basisT(f, mons.size(), d);
  for (int b = 0; b < d; ++b) {
    polys.push_back(garnir_polynomial(f, n, tableaux[b]));
    for (const auto& [mono, c] : polys.back().terms()) basisT(mons.index(mono), b) = c;
  }
  auto permuted = [&](const Poly<FiniteField>& p, const std::vector<int>& perm) {
    GroupElement g{perm, std::vector<int>(n, 0)};
    Poly<FiniteField> r(f, n);
    for (const auto& [mono, c] : p.terms()) r.add_term(act_on_monomial(g, mono, 1).first, c);
    return r;
  };
  std::vector<std::vector<int>> gens;
  std::vector<FMatrix> gen_mats;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    FMatrix mat(f, d, d);
    for (int b = 0; b < d; ++b) {
      const auto img = permuted(polys[b], perm);
      std::vector<FiniteField::Elem> rhs(mons.size(), f.zero());
      for (const auto& [mono, c] : img.terms()) rhs[mons.index(mono)] = c;
      const auto coords = solve(basisT, rhs);
      require(coords.has_value(), ErrorCode::ExpressionFailure,
              "permuted Garnir polynomial outside the Specht span for " + partition_to_string(lambda));
      for (int a = 0; a < d; ++a) mat(a, b) = (*coords)[a];
    }
    gens.push_back(perm);
    gen_mats.push_back(std::move(mat));
  }
  std::map<std::vector<int>, FMatrix> all;
  std::vector<int> id(n);
  for (int j = 0; j < n; ++j) id[j] = j;
  all.emplace(id, FMatrix::identity(f, d));
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<int> np(n);
      for (int j = 0; j < n; ++j) np[j] = gens[g][p[j]];
      if (all.count(np)) continue;
      all.emplace(np, gen_mats[g] * all.at(p));
      queue.push_back(np);
    }
  }
  return all;
}

int parse_int(const std::string& s, const std::string& full) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::UnknownName, "cannot parse representation '" + full + "'");
}

}  // namespace

GradedRep specht_rep(const Partition& lambda, const FiniteField& field, const GroupSpec& group) {
  validate_partition(lambda);
  require(partition_size(lambda) == group.n(), ErrorCode::IncompatibleGroup,
          "partition " + partition_to_string(lambda) + " does not match rank " + std::to_string(group.n()));
  auto mats = std::make_shared<const std::map<std::vector<int>, FMatrix>>(specht_matrices(lambda, field));
  const int d = static_cast<int>(mats->begin()->second.rows());
  std::vector<std::string> labels;
  for (const auto& t : standard_tableaux(lambda)) {
    std::string s = "f[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (i) s += "|";
      for (std::size_t j = 0; j < t.rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(t.rows[i][j]);
    }
    labels.push_back(s + "]");
  }
  return GradedRep("specht:" + partition_to_string(lambda), d, labels, field, group,
                   [mats](const GroupElement& g) { return mats->at(g.perm); });
}

GradedRep builtin_rep(const GroupSpec& group, const std::string& name, const FiniteField& field) {
  return builtin_rep_with_root(group, name, field, 1);
}

GradedRep builtin_rep_with_root(const GroupSpec& G, const std::string& name, const FiniteField& f, int stride) {
  const int n = G.n(), m = G.m();
  require(f.root_order() % m == 0 || m == 1, ErrorCode::IncompatibleGroup, "field lacks m-th roots of unity");
  // xi_G = xi_field^(root_order/m * stride)
  const int step = (m == 1 ? 0 : static_cast<int>(f.root_order() / m)) * stride;

  if (name == "trivial" || name == "rho:0") {
    return GradedRep(name, 1, {"v"}, f, G, [f](const GroupElement&) { return scalar_matrix(f, f.one()); });
  }
  if (name == "sign") {
    return GradedRep(name, 1, {"v"}, f, G, [f](const GroupElement& g) {
      return scalar_matrix(f, permutation_sign(g.perm) > 0 ? f.one() : f.neg(f.one()));
    });
  }
  if (name.rfind("pullback:", 0) == 0) {
    const std::string inner = name.substr(9);
    const int r = G.r();
    const GroupSpec H(r, r, n);
    const GradedRep base = builtin_rep_with_root(H, inner, f, stride);
    return GradedRep(name, base.dim(), base.labels(), f, G, [base, r](const GroupElement& g) {
      GroupElement h = g;
      for (auto& e : h.exps) e %= r;
      return base.matrix(h);
    });
  }
  if (name.rfind("specht:", 0) == 0) {
    GradedRep s = specht_rep(parse_partition(name.substr(7)), f, G);
    return s;
  }
  if (name.rfind("rho:", 0) == 0 || name.rfind("gamma:", 0) == 0) {
    const bool is_rho = name[0] == 'r';
    const int i = parse_int(name.substr(is_rho ? 4 : 6), name);
    const int want = is_rho ? 2 : 3;
    require(n == want, ErrorCode::IncompatibleGroup, name + " needs rank " + std::to_string(want));
    if (is_rho && i < 0) {
      require(i >= -3, ErrorCode::UnknownName, "unknown dihedral character " + name);
      if (i == -3 || (i == -1 && m % 2 == 1)) return builtin_rep_with_root(G, "sign", f, stride);
      require(m % 2 == 0 && G.r() % 2 == 0, ErrorCode::IncompatibleGroup, name + " needs even m and r");
      const bool flip = (i == -1);
      return GradedRep(name, 1, {"v"}, f, G, [f, flip](const GroupElement& g) {
        int s = (g.exps[0] % 2 == 0) ? 1 : -1;
        if (flip && g.perm[0] == 1) s = -s;
        return scalar_matrix(f, s > 0 ? f.one() : f.neg(f.one()));
      });
    }
    if (!is_rho && i == 0) {
      return GradedRep(name, 2, {"e1", "e2"}, f, G, [f](const GroupElement& g) {
        // e1 = a1 - a3, e2 = a3 - a2; permutations move the a_j, roots of unity act trivially.
        const int basis[2][3] = {{1, 0, -1}, {0, -1, 1}};
        FMatrix mat(f, 2, 2);
        for (int b = 0; b < 2; ++b) {
          int c[3] = {0, 0, 0};
          for (int j = 0; j < 3; ++j) c[g.perm[j]] += basis[b][j];
          mat(0, b) = f.from_int(c[0]);
          mat(1, b) = f.from_int(-c[1]);
        }
        return mat;
      });
    }
    require(i > 0, ErrorCode::UnknownName, "unknown representation " + name);
    std::vector<std::string> labels;
    for (int j = 0; j < n; ++j) labels.push_back((is_rho ? "e" : "w") + std::to_string(j + 1));
    return GradedRep(name, n, labels, f, G, [f, i, n, step](const GroupElement& g) {
      FMatrix mat(f, n, n);
      for (int j = 0; j < n; ++j) mat(g.perm[j], j) = f.xi_pow(static_cast<std::int64_t>(step) * i * g.exps[j]);
      return mat;
    });
  }
  fail(ErrorCode::UnknownName, "unknown representation '" + name + "'");
}

std::vector<std::string> dihedral_irreducibles(int m) {
  std::vector<std::string> out;
  if (m % 2 == 0) {
    out = {"rho:-3", "rho:-2", "rho:-1", "rho:0"};
    for (int i = 1; i < m / 2; ++i) out.push_back("rho:" + std::to_string(i));
  } else {
    out = {"rho:-1", "rho:0"};
    for (int i = 1; i <= (m - 1) / 2; ++i) out.push_back("rho:" + std::to_string(i));
  }
  return out;
}

}  // namespace cherednik
