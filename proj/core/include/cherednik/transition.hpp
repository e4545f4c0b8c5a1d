#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cherednik/field.hpp"
#include "cherednik/group.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/series.hpp"

namespace cherednik {

/// Graded character: degree -> (irreducible name -> multiplicity).
using GradedCharacter = std::vector<std::map<std::string, std::int64_t>>;

/// Entries a(row, col) with [L(col)] = sum_row a(row, col)(t) [M(row)]. Rows and columns use the same labels.
struct TransitionMatrix {
  int m = 0;
  std::uint32_t p = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<IntPoly>> entries;
  /// Graded characters of the simple modules, by column.
  std::vector<GradedCharacter> simple_characters;
  std::string convention;

  std::size_t index(const std::string& label) const;
  const IntPoly& operator()(const std::string& row, const std::string& col) const {
    return entries[index(row)][index(col)];
  }
  std::string to_string() const;
};

void to_json(nlohmann::json& j, const TransitionMatrix& t);

/// Direct sum decomposition of a representation given by generator matrices into the named irreducibles.
std::map<std::string, std::int64_t> decompose(const FiniteField& f, const GroupSpec& group,
                                              const std::vector<Matrix<FiniteField>>& gens,
                                              const std::vector<std::string>& irreducibles);

/// Transition matrix of G(m,m,2) at generic parameters, from the graded characters of every L(rho):
/// a(., tau)(t) = sum_{i,d} (-1)^i t^{d+i} [Lambda^i h* (x) L(tau)_d].
TransitionMatrix transition_matrix(int m, std::uint32_t p, std::uint64_t seed = 1);

/// Graded character of M(rho) = Sym(h*) (x) rho through degree dmax.
GradedCharacter verma_character(int m, std::uint32_t p, const std::string& rho, int dmax, std::uint64_t seed = 1);

/// Whether sum_row a(row, col) ch M(row) equals ch L(col) in every degree up to dmax, for every column.
bool reproduces_simple_characters(const TransitionMatrix& t, int dmax, std::uint64_t seed = 1);

}  // namespace cherednik
