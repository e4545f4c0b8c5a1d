#include "cherednik/monomial.hpp"

#include <functional>

namespace cherednik {

std::string Monomial::to_string(int nvars, const std::vector<std::string>* names) const {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names ? (*names)[i] : "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialBasis::MonomialBasis(int nvars, int degree) : n_(nvars), d_(degree) {
  if (degree < 0) return;
  Monomial cur;
  // Recursive fill in descending lex order: larger first exponents come first.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n_ - 1) {
      cur.e[var] = static_cast<std::uint8_t>(remaining);
      list_.push_back(cur);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      cur.e[var] = static_cast<std::uint8_t>(a);
      rec(var + 1, remaining - a);
    }
    cur.e[var] = 0;
  };
  if (n_ == 0) {
    if (degree == 0) list_.push_back(cur);
  } else {
    rec(0, degree);
  }
  index_.reserve(list_.size() * 2);
  for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i].key(), i);
}

long MonomialBasis::index(const Monomial& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace cherednik
