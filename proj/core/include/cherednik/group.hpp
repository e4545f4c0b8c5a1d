#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cherednik/field.hpp"
#include "cherednik/monomial.hpp"

namespace cherednik {

/// Monomial matrix acting on the dual space by g.x_j = xi^{e_j} x_{perm[j]}.
/// Exponents are reduced modulo m.
struct GroupElement {
  std::vector<int> perm;
  std::vector<int> exps;

  static GroupElement identity(int n) {
    GroupElement g;
    g.perm.resize(n);
    g.exps.assign(n, 0);
    for (int i = 0; i < n; ++i) g.perm[i] = i;
    return g;
  }
  int rank() const noexcept { return static_cast<int>(perm.size()); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.perm != b.perm ? a.perm < b.perm : a.exps < b.exps;
  }
  std::string to_string() const;
};

/// Product gh (apply h first), exponents reduced mod m.
GroupElement compose(const GroupElement& g, const GroupElement& h, int m);
GroupElement inverse(const GroupElement& g, int m);
int permutation_sign(const std::vector<int>& perm);

/// Image of a monomial: g.x^a = xi^{shift} x^{b}; returns b and shift mod m.
std::pair<Monomial, int> act_on_monomial(const GroupElement& g, const Monomial& a, int m);

enum class ReflectionKind { S, T };

/// s_ij^k (i < j) or t_i^k, with its root data.
struct Reflection {
  ReflectionKind kind = ReflectionKind::S;
  int i = 0;
  int j = 0;
  int k = 0;
  GroupElement element;
  int class_index = 0;

  std::string name() const;
  /// alpha_s as coefficients on x_1..x_n.
  std::vector<FiniteField::Elem> alpha(const FiniteField& f, int n, int m, int r) const;
  /// alpha_s^vee as its pairings with x_1..x_n.
  std::vector<FiniteField::Elem> alpha_check(const FiniteField& f, int n, int m, int r) const;
};

/// The group G(m, r, n) of monomial matrices whose entries are m-th roots of unity
/// and whose entry product is an (m/r)-th root of unity.
class GroupSpec {
 public:
  GroupSpec(int m, int r, int n);

  int m() const noexcept { return m_; }
  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  int q() const noexcept { return m_ / r_; }
  std::uint64_t order() const;
  bool is_dihedral() const noexcept { return n_ == 2 && m_ == r_; }

  /// Degrees of the basic invariants: m, 2m, ..., (n-1)m, nm/r.
  std::vector<int> degrees() const;

  bool contains(const GroupElement& g) const;
  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> generators() const;

  const std::vector<Reflection>& reflections() const noexcept { return refl_; }
  const std::vector<std::string>& class_labels() const noexcept { return classes_; }
  int class_index(const std::string& label) const;

  GroupElement s(int i, int j, int k) const;
  GroupElement t(int i, int k) const;

  std::string to_string() const;

 private:
  int m_, r_, n_;
  std::vector<Reflection> refl_;
  std::vector<std::string> classes_;
};

/// Brute-force enumeration of all elements with rank(1 - g) = 1.
std::vector<GroupElement> brute_force_reflections(const GroupSpec& G, const FiniteField& f);

/// Conjugacy classes of the listed reflections under the whole group, as index lists.
std::vector<std::vector<int>> brute_force_reflection_classes(const GroupSpec& G);

}  // namespace cherednik
