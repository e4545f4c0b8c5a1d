#include <set>

#include "cherednik/group.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/oracles.hpp"
#include "cherednik/polyparse.hpp"
#include "cherednik/rep.hpp"
#include "cherednik/series.hpp"
#include "cherednik/tableau.hpp"
#include "support.hpp"

using namespace cherednik;
using P = Poly<FiniteField>;

namespace {

Matrix<FiniteField> as_matrix(const FiniteField& F, const GroupElement& g) {
  const int n = g.rank();
  Matrix<FiniteField> M(F, n, n);
  for (int j = 0; j < n; ++j) M(g.perm[j], j) = F.xi_pow(g.exps[j]);
  return M;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("polynomial arithmetic and parsing") {
  const auto F = FiniteField::prime(11);
  const auto x = P::variable(F, 3, 0), y = P::variable(F, 3, 1), z = P::variable(F, 3, 2);
  CHECK(parse_poly(F, 3, "(x + y)^2") == x * x + (x * y).scaled(F.from_int(2)) + y * y);
  CHECK(parse_poly(F, 3, "3x^2y - z") == (x * x * y).scaled(F.from_int(3)) - z);
  CHECK(parse_poly(F, 3, "x1*x3") == x * z);
  CHECK((x.pow(3) + y).derivative(0) == x.pow(2).scaled(F.from_int(3)));
  CHECK((x + y).substitute_powers(2) == x * x + y * y);
  const auto q = (x.pow(3) - y.pow(3)).divide_exact(x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x * x + x * y + y * y);
  CHECK_FALSE((x * x + y).divide_exact(x).has_value());
  CHECK((x * y + z).is_homogeneous() == false);
  CHECK_ERROR(parse_poly(F, 3, "x +* y"), ParseError);
}

TEST_CASE("G(m,r,n) has the expected order and reflections") {
  for (auto [m, r, n] : {std::tuple{1, 1, 3}, {2, 1, 2}, {2, 2, 3}, {3, 3, 2}, {4, 2, 2}, {3, 1, 2}, {2, 2, 4}}) {
    const GroupSpec G(m, r, n);
    const auto F = FiniteField::with_roots(m == 1 ? 7 : 13, m, 1, 0);
    std::uint64_t want = factorial(n);
    for (int k = 0; k < n; ++k) want *= m;
    want /= r;
    CHECK(G.order() == want);
    const auto elems = G.elements();
    CHECK(elems.size() == want);
    CHECK(std::set<GroupElement>(elems.begin(), elems.end()).size() == want);
    const std::size_t s_type = static_cast<std::size_t>(m) * n * (n - 1) / 2;
    const std::size_t t_type = static_cast<std::size_t>(n) * (m / r - 1);
    CHECK(G.reflections().size() == s_type + t_type);
    const auto I = Matrix<FiniteField>::identity(F, n);
    for (const auto& s : G.reflections()) {
      CHECK(G.contains(s.element));
      CHECK(rank(I - as_matrix(F, s.element)) == 1);
    }
    for (const auto& a : G.generators())
      for (const auto& b : G.generators()) CHECK(as_matrix(F, compose(a, b, m)) == as_matrix(F, a) * as_matrix(F, b));
  }
  CHECK_ERROR(GroupSpec(4, 3, 2), InvalidParameters);
}

TEST_CASE("dihedral irreducibles are representations whose dimensions square-sum to the order") {
  for (int m : {3, 4, 5, 6, 8}) {
    const GroupSpec G(m, m, 2);
    const auto F = FiniteField::with_roots(17, m, 1, 0);
    std::uint64_t sum = 0;
    for (const auto& name : dihedral_irreducibles(m)) {
      const auto rho = builtin_rep(G, name, F);
      CHECK(rho.is_homomorphism(3, 40));
      sum += static_cast<std::uint64_t>(rho.dim()) * rho.dim();
    }
    CHECK(sum == G.order());
  }
}

TEST_CASE("Specht modules: tableaux, Garnir polynomials and the hook formula") {
  const auto F = FiniteField::prime(7);
  for (const auto& lambda : {Partition{3, 1}, Partition{2, 2}, Partition{3, 2}, Partition{2, 1, 1}, Partition{4, 1}}) {
    const auto tabs = standard_tableaux(lambda);
    CHECK(static_cast<std::int64_t>(tabs.size()) == standard_tableaux_count(lambda));
    const int n = partition_size(lambda);
    std::vector<P> gs;
    for (const auto& t : tabs) gs.push_back(garnir_polynomial(F, n, t));
    const GroupSpec G(1, 1, n);
    CHECK(specht_rep(lambda, F, G).is_homomorphism(5, 30));
    CHECK(specht_rep(lambda, F, G).dim() == static_cast<int>(tabs.size()));
  }
  CHECK(standard_tableaux_count({5, 4, 3, 2, 1}) == 292864);
  CHECK_ERROR(parse_partition("2,3"), NotAPartition);
}

TEST_CASE("series helpers expand rational functions") {
  const auto s = expand_rational(IntPoly{1} - IntPoly::monomial(2), {1, 1}, 4);
  CHECK(s.coeffs == std::vector<std::int64_t>{1, 2, 2, 2, 2});
  CHECK(IntPoly::geometric(3) * IntPoly{1, -1} == IntPoly{1, 0, 0, -1});
  CHECK(IntPoly{1, 1}.substitute_power(3) == IntPoly{1, 0, 0, 1});
  CHECK(closed_hilbert_dihedral(4, "rho:1")->c == std::vector<std::int64_t>{2, 4, 2});
  CHECK(closed_hilbert_dihedral(5, "trivial")->c == std::vector<std::int64_t>{1, 2, 2, 2, 2, 1});
  CHECK(closed_hilbert_trivial(2, 1, 2, 6).coeffs == std::vector<std::int64_t>{1, 2, 2, 2, 1, 0, 0});
}
