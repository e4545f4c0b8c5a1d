#pragma once

#include <string>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

using Partition = std::vector<int>;

/// Parses "3,1" or "3 1"; throws NotAPartition unless weakly decreasing and positive.
Partition parse_partition(const std::string& text);
void validate_partition(const Partition& lambda);
int partition_size(const Partition& lambda);
std::string partition_to_string(const Partition& lambda);

/// n(lambda) = sum (i - 1) lambda_i, the degree of the Garnir polynomials.
int n_lambda(const Partition& lambda);
std::vector<int> hook_lengths(const Partition& lambda);
Partition conjugate(const Partition& lambda);

/// A filling of a Young diagram by 1..n (1-based entries), given row by row.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  bool is_standard() const;
};

/// Throws MalformedTableau unless rows have weakly decreasing lengths and use 1..n once each.
void validate_tableau(const Tableau& t);

std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Product over columns of (x_a - x_b) for a above b.
template <class F>
Poly<F> garnir_polynomial(const F& f, int nvars, const Tableau& t) {
  validate_tableau(t);
  require(t.size() <= nvars, ErrorCode::MalformedTableau, "tableau uses more variables than available");
  Poly<F> p = Poly<F>::constant(f, nvars, f.one());
  const Partition shape = t.shape();
  for (int col = 0; col < shape[0]; ++col) {
    std::vector<int> entries;
    for (const auto& row : t.rows)
      if (static_cast<int>(row.size()) > col) entries.push_back(row[col] - 1);
    for (std::size_t a = 0; a < entries.size(); ++a)
      for (std::size_t b = a + 1; b < entries.size(); ++b)
        p = p * (Poly<F>::variable(f, nvars, entries[a]) - Poly<F>::variable(f, nvars, entries[b]));
  }
  return p;
}

}  // namespace cherednik
