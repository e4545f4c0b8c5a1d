#include "cherednik/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cherednik/error.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i] + 1);
  s += ";";
  for (std::size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + std::to_string(exps[i]);
  return s + ")";
}

GroupElement compose(const GroupElement& g, const GroupElement& h, int m) {
  const int n = g.rank();
  GroupElement r;
  r.perm.resize(n);
  r.exps.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[i] = g.perm[h.perm[i]];
    r.exps[i] = mod(h.exps[i] + g.exps[h.perm[i]], m);
  }
  return r;
}

GroupElement inverse(const GroupElement& g, int m) {
  const int n = g.rank();
  GroupElement r;
  r.perm.resize(n);
  r.exps.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[g.perm[i]] = i;
    r.exps[g.perm[i]] = mod(-g.exps[i], m);
  }
  return r;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::pair<Monomial, int> act_on_monomial(const GroupElement& g, const Monomial& a, int m) {
  Monomial b;
  int shift = 0;
  for (int j = 0; j < g.rank(); ++j) {
    b.e[g.perm[j]] = a.e[j];
    shift += g.exps[j] * a.e[j];
  }
  return {b, mod(shift, m)};
}

std::string Reflection::name() const {
  if (kind == ReflectionKind::S)
    return "s_" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(k);
  return "t_" + std::to_string(i + 1) + "^" + std::to_string(k);
}

std::vector<FiniteField::Elem> Reflection::alpha(const FiniteField& f, int n, int, int) const {
  std::vector<FiniteField::Elem> a(n, f.zero());
  a[i] = f.one();
  if (kind == ReflectionKind::S) a[j] = f.neg(f.xi_pow(k));
  return a;
}

std::vector<FiniteField::Elem> Reflection::alpha_check(const FiniteField& f, int n, int, int r) const {
  std::vector<FiniteField::Elem> a(n, f.zero());
  if (kind == ReflectionKind::S) {
    a[i] = f.one();
    a[j] = f.neg(f.xi_pow(-k));
  } else {
    a[i] = f.sub(f.one(), f.xi_pow(static_cast<std::int64_t>(r) * k));
  }
  return a;
}

GroupSpec::GroupSpec(int m, int r, int n) : m_(m), r_(r), n_(n) {
  require(m >= 1 && r >= 1 && n >= 1 && m % r == 0, ErrorCode::InvalidParameters,
          "G(m,r,n) requires positive m, r, n with r | m");
  require(n <= kMaxVars, ErrorCode::InvalidParameters, "rank above " + std::to_string(kMaxVars) + " not supported");
  const bool split = (n == 2 && r % 2 == 0);
  if (n >= 2) {
    if (split) {
      classes_ = {"s+", "s-"};
    } else {
      classes_ = {"s"};
    }
  }
  for (int k = 1; k < q(); ++k) classes_.push_back("t" + std::to_string(k));

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < m; ++k) {
        Reflection s;
        s.kind = ReflectionKind::S;
        s.i = i;
        s.j = j;
        s.k = k;
        s.element = this->s(i, j, k);
        s.class_index = split ? (k % 2 == 0 ? 0 : 1) : 0;
        refl_.push_back(std::move(s));
      }
  const int tbase = static_cast<int>(classes_.size()) - (q() - 1);
  for (int i = 0; i < n; ++i)
    for (int k = 1; k < q(); ++k) {
      Reflection t;
      t.kind = ReflectionKind::T;
      t.i = i;
      t.k = k;
      t.element = this->t(i, k);
      t.class_index = tbase + k - 1;
      refl_.push_back(std::move(t));
    }
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t o = 1;
  for (int i = 0; i < n_; ++i) o *= static_cast<std::uint64_t>(m_) * (i + 1);
  return o / r_;
}

std::vector<int> GroupSpec::degrees() const {
  std::vector<int> d;
  for (int i = 1; i < n_; ++i) d.push_back(i * m_);
  d.push_back(n_ * m_ / r_);
  return d;
}

bool GroupSpec::contains(const GroupElement& g) const {
  if (g.rank() != n_) return false;
  std::vector<int> p = g.perm;
  std::sort(p.begin(), p.end());
  for (int i = 0; i < n_; ++i)
    if (p[i] != i) return false;
  int s = 0;
  for (int e : g.exps) {
    if (e < 0 || e >= m_) return false;
    s += e;
  }
  return s % r_ == 0;
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> e(n_, 0);
    while (true) {
      int s = 0;
      for (int x : e) s += x;
      if (s % r_ == 0) out.push_back({perm, e});
      int pos = 0;
      while (pos < n_ && ++e[pos] == m_) e[pos++] = 0;
      if (pos == n_) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<GroupElement> GroupSpec::generators() const {
  std::vector<GroupElement> g;
  for (int i = 0; i + 1 < n_; ++i) g.push_back(s(i, i + 1, 0));
  if (n_ >= 2 && m_ > 1) g.push_back(s(0, 1, 1));
  if (q() > 1) g.push_back(t(0, 1));
  if (g.empty()) g.push_back(GroupElement::identity(n_));
  return g;
}

int GroupSpec::class_index(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i] == label) return static_cast<int>(i);
  fail(ErrorCode::UnknownName, "no reflection class '" + label + "' in " + to_string());
}

GroupElement GroupSpec::s(int i, int j, int k) const {
  GroupElement g = GroupElement::identity(n_);
  std::swap(g.perm[i], g.perm[j]);
  g.exps[i] = mod(k, m_);
  g.exps[j] = mod(-k, m_);
  return g;
}

GroupElement GroupSpec::t(int i, int k) const {
  GroupElement g = GroupElement::identity(n_);
  g.exps[i] = mod(r_ * k, m_);
  return g;
}

std::string GroupSpec::to_string() const {
  return "G(" + std::to_string(m_) + "," + std::to_string(r_) + "," + std::to_string(n_) + ")";
}

std::vector<GroupElement> brute_force_reflections(const GroupSpec& G, const FiniteField& f) {
  std::vector<GroupElement> out;
  const int n = G.n();
  for (const auto& g : G.elements()) {
    Matrix<FiniteField> a(f, n, n);
    for (int j = 0; j < n; ++j) {
      a(j, j) = f.one();
      a(g.perm[j], j) = f.sub(a(g.perm[j], j), f.xi_pow(g.exps[j]));
    }
    if (rank(a) == 1) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> brute_force_reflection_classes(const GroupSpec& G) {
  const auto& refl = G.reflections();
  std::map<GroupElement, int> index;
  for (std::size_t i = 0; i < refl.size(); ++i) index[refl[i].element] = static_cast<int>(i);
  std::vector<int> cls(refl.size(), -1);
  std::vector<std::vector<int>> out;
  const auto elems = G.elements();
  for (std::size_t i = 0; i < refl.size(); ++i) {
    if (cls[i] >= 0) continue;
    std::set<int> members;
    for (const auto& g : elems) {
      const auto c = compose(compose(g, refl[i].element, G.m()), inverse(g, G.m()), G.m());
      members.insert(index.at(c));
    }
    for (int x : members) cls[x] = static_cast<int>(out.size());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

}  // namespace cherednik
