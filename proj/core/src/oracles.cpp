#include "cherednik/oracles.hpp"

#include "cherednik/error.hpp"
#include "cherednik/monomial.hpp"

namespace cherednik {

IntPoly hook_polynomial(const Partition& lambda) {
  IntPoly h{1};
  for (int k : hook_lengths(lambda)) h = h * (IntPoly{1} - IntPoly::monomial(k));
  return h;
}

IntPoly q_pochhammer(int n) {
  IntPoly h{1};
  for (int k = 1; k <= n; ++k) h = h * (IntPoly{1} - IntPoly::monomial(k));
  return h;
}

std::int64_t standard_tableaux_count(const Partition& lambda) {
  validate_partition(lambda);
  const int n = partition_size(lambda);
  require(n <= 30, ErrorCode::UnsupportedCase, "partition too large for the hook length formula");
  __extension__ using Wide = __int128;
  Wide num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (int h : hook_lengths(lambda)) den *= h;
  return static_cast<std::int64_t>(num / den);
}

GradedSeries closed_hilbert_wreath(const Partition& lambda, int m, int n, int hbar, int p, int N) {
  validate_partition(lambda);
  require(partition_size(lambda) == n, ErrorCode::InvalidParameters, "partition size differs from n");
  require(hbar == 0 || hbar == 1, ErrorCode::InvalidParameters, "hbar must be 0 or 1");
  const int scale = hbar == 0 ? m : m * p;
  const IntPoly num = hook_polynomial(lambda).substitute_power(scale) * IntPoly{standard_tableaux_count(lambda)};
  return expand_rational(num, std::vector<int>(n, 1), N);
}

GradedSeries closed_hilbert_trivial(int m, int r, int n, int N) {
  require(m >= 1 && r >= 1 && m % r == 0 && n >= 1, ErrorCode::InvalidParameters, "need r | m and n >= 1");
  IntPoly num{1};
  for (int k = 1; k < n; ++k) num = num * (IntPoly{1} - IntPoly::monomial(k * m));
  num = num * (IntPoly{1} - IntPoly::monomial(n * m / r));
  return expand_rational(num, std::vector<int>(n, 1), N);
}

std::optional<IntPoly> closed_hilbert_dihedral(int m, const std::string& rho) {
  require(m >= 2, ErrorCode::InvalidParameters, "dihedral groups need m >= 2");
  if (rho == "trivial" || rho == "sign") return closed_hilbert_dihedral(m, rho == "trivial" ? "rho:0" : "rho:-3");
  if (rho.rfind("rho:", 0) != 0) return std::nullopt;
  int i = 0;
  try {
    i = std::stoi(rho.substr(4));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const int lowest = m % 2 == 0 ? -3 : -1;
  if (i < lowest || 2 * i >= m) return std::nullopt;
  if (i <= 0) return IntPoly{1, 1} * IntPoly::geometric(m);
  if (m == 4 && i == 1) return IntPoly{2, 4, 2};
  if (i == 1 || (m % 2 == 0 && m > 4 && i == m / 2 - 1)) return IntPoly{2, 2, 2};
  return IntPoly{2};
}

}  // namespace cherednik
