#include <random>

#include "cherednik/field.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/ratfunc.hpp"
#include "support.hpp"

using namespace cherednik;

TEST_CASE("prime field arithmetic matches integers mod p") {
  const auto F = FiniteField::prime(101);
  CHECK(F.size() == 101);
  for (std::int64_t a = -30; a < 30; a += 7)
    for (std::int64_t b = 1; b < 40; b += 5) {
      const auto x = F.from_int(a), y = F.from_int(b);
      CHECK(F.mul(x, y) == F.from_int(a * b));
      CHECK(F.add(x, y) == F.from_int(a + b));
      CHECK(F.mul(F.div(x, y), y) == x);
    }
  CHECK_ERROR(FiniteField::prime(12), NotPrime);
}

TEST_CASE("extension fields carry a primitive m-th root of unity") {
  for (auto [p, m] : {std::pair{7u, 5u}, {5u, 4u}, {11u, 10u}, {3u, 8u}, {5u, 12u}}) {
    const auto F = FiniteField::with_roots(p, m, 1, 256);
    CHECK(F.size() >= 256);
    CHECK((F.size() - 1) % m == 0);
    CHECK(F.order(F.xi()) == m);
    CHECK(F.pow(F.xi(), m) == F.one());
    std::mt19937 rng(p * 31 + m);
    for (int k = 0; k < 50; ++k) {
      const auto a = static_cast<FiniteField::Elem>(rng() % F.size()), b = static_cast<FiniteField::Elem>(rng() % F.size());
      const auto c = static_cast<FiniteField::Elem>(rng() % F.size());
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.pow(a, F.size()) == a);
    }
  }
  CHECK_ERROR(FiniteField::with_roots(3, 3), CharacteristicDividesM);
  CHECK_ERROR(FiniteField::with_roots(5, 10), CharacteristicDividesM);
}

TEST_CASE("rank, kernel and solve agree") {
  const auto F = FiniteField::prime(13);
  Matrix<FiniteField> A(F, 3, 4);
  const int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 5, 7}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) A(i, j) = F.from_int(vals[i][j]);
  CHECK(rank(A) == 2);
  const auto K = kernel_basis(A);
  CHECK(K.rows() == 2);
  CHECK((A * K.transpose()).is_zero());
  const std::vector<FiniteField::Elem> b{F.from_int(1), F.from_int(2), F.from_int(3)};
  const auto x = solve(A, b);
  REQUIRE(x.has_value());
  for (int i = 0; i < 3; ++i) {
    auto s = F.zero();
    for (int j = 0; j < 4; ++j) s = F.add(s, F.mul(A(i, j), (*x)[j]));
    CHECK(s == b[i]);
  }
  CHECK_FALSE(solve(A, {F.from_int(1), F.from_int(3), F.from_int(0)}).has_value());
}

TEST_CASE("rational functions normalize and specialize") {
  const auto K = FiniteField::prime(7);
  const RationalFunctionField R(K, {"c", "d"});
  const auto c = R.param(0), d = R.param(1);
  const auto q = R.div(R.sub(R.mul(c, c), R.mul(d, d)), R.sub(c, d));
  CHECK(R.eq(q, R.add(c, d)));
  CHECK(R.eq(R.mul(q, R.inv(q)), R.one()));
  CHECK(R.specialize(q, {K.from_int(2), K.from_int(3)}) == K.from_int(5));
  CHECK_ERROR(R.inv(R.zero()), ZeroDenominator);
}
