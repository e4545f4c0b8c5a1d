#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cherednik/field.hpp"
#include "cherednik/group.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/tableau.hpp"

namespace cherednik {

using FMatrix = Matrix<FiniteField>;

/// A representation of G(m,r,n) by matrices over F_q. Column b of matrix(g)
/// holds the coordinates of g.e_b.
class GradedRep {
 public:
  using Eval = std::function<FMatrix(const GroupElement&)>;

  GradedRep(std::string name, int dim, std::vector<std::string> labels, FiniteField field, GroupSpec group, Eval eval);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const FiniteField& field() const noexcept { return field_; }
  const GroupSpec& group() const noexcept { return group_; }

  FMatrix matrix(const GroupElement& g) const { return (*eval_)(g); }
  std::vector<FMatrix> generator_matrices() const;

  /// Checks rho(gh) = rho(g) rho(h) on random pairs of elements.
  bool is_homomorphism(std::uint64_t seed, int samples) const;

 private:
  std::string name_;
  int dim_;
  std::vector<std::string> labels_;
  FiniteField field_;
  GroupSpec group_;
  std::shared_ptr<const Eval> eval_;
};

/// Specht module S_lambda on Garnir polynomials, pulled back to G through g -> perm(g).
GradedRep specht_rep(const Partition& lambda, const FiniteField& field, const GroupSpec& group);

/// Representation by name: trivial, sign, rho:i, gamma:i, specht:3,1, pullback:<name>.
/// Dihedral one-dimensional characters: rho:0 trivial; rho:-3 sign (m even);
/// rho:-2 sends s_12^k to (-1)^k; rho:-1 sends s_12^k to -(-1)^k (m even) or is the sign (m odd).
/// Rotations diag(xi^a, xi^-a) act on rho:-1 and rho:-2 by (-1)^a.
GradedRep builtin_rep(const GroupSpec& group, const std::string& name, const FiniteField& field);

/// Same as builtin_rep but with xi replaced by xi^stride when evaluating root-of-unity entries.
GradedRep builtin_rep_with_root(const GroupSpec& group, const std::string& name, const FiniteField& field, int stride);

/// Names of the irreducible dihedral representations of G(m,m,2) in table order.
std::vector<std::string> dihedral_irreducibles(int m);

}  // namespace cherednik
