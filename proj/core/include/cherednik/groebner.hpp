#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/monomial.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

/// Basis element x^mon e_comp of a free module.
struct ModuleTerm {
  Monomial mon;
  int comp = 0;
  friend bool operator==(const ModuleTerm& a, const ModuleTerm& b) noexcept {
    return a.comp == b.comp && a.mon == b.mon;
  }
};

/// Degree-compatible term-over-position order on a free module whose generators e_k sit in degree shift[k].
class ModuleOrder {
 public:
  ModuleOrder() : shift_{0} {}
  explicit ModuleOrder(std::vector<int> shifts) : shift_(std::move(shifts)) {}
  static ModuleOrder free(int rank, int shift = 0) { return ModuleOrder(std::vector<int>(rank, shift)); }

  int rank() const noexcept { return static_cast<int>(shift_.size()); }
  int shift(int k) const { return shift_.at(k); }
  const std::vector<int>& shifts() const noexcept { return shift_; }
  int degree(const ModuleTerm& t) const { return t.mon.degree() + shift_[t.comp]; }

  bool greater(const ModuleTerm& a, const ModuleTerm& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    if (!(a.mon == b.mon)) return grlex_greater(a.mon, b.mon);
    return a.comp < b.comp;
  }

 private:
  std::vector<int> shift_;
};

/// Sparse module element, terms sorted in descending order.
template <class F>
using ModuleVec = std::vector<std::pair<ModuleTerm, typename F::Elem>>;

template <class F>
ModuleVec<F> module_vec(const std::vector<Poly<F>>& comps, const ModuleOrder& ord) {
  require(static_cast<int>(comps.size()) == ord.rank(), ErrorCode::SizeMismatch, "component count does not match rank");
  ModuleVec<F> v;
  for (int k = 0; k < static_cast<int>(comps.size()); ++k)
    for (const auto& [m, c] : comps[k].terms()) v.push_back({{m, k}, c});
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  return v;
}

template <class F>
std::vector<Poly<F>> module_components(const F& f, int nvars, int rank, const ModuleVec<F>& v) {
  std::vector<Poly<F>> out(rank, Poly<F>(f, nvars));
  for (const auto& [t, c] : v) out[t.comp].add_term(t.mon, c);
  return out;
}

/// a - c * u * b, where every term of b times u keeps its relative order.
template <class F>
ModuleVec<F> sub_multiple(const F& f, const ModuleOrder& ord, const ModuleVec<F>& a, const typename F::Elem& c,
                          const Monomial& u, const ModuleVec<F>& b) {
  ModuleVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto negc = f.neg(c);
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const ModuleTerm tb{b[j].first.mon * u, b[j].first.comp};
    if (i == a.size() || ord.greater(tb, a[i].first)) {
      out.push_back({tb, f.mul(negc, b[j].second)});
      ++j;
    } else if (a[i].first == tb) {
      auto s = f.add(a[i].second, f.mul(negc, b[j].second));
      if (!f.is_zero(s)) out.push_back({tb, s});
      ++i;
      ++j;
    } else {
      out.push_back(a[i++]);
    }
  }
  return out;
}

/// Groebner basis of a homogeneous submodule of a graded free module, computed degree by degree.
/// With a degree limit the basis is exact through that degree.
template <class F>
class ModuleGroebner {
 public:
  using Elem = typename F::Elem;
  using Vec = ModuleVec<F>;

  ModuleGroebner(F field, int nvars, ModuleOrder order)
      : f_(std::move(field)), n_(nvars), ord_(std::move(order)), lts_(ord_.rank()) {}

  static ModuleGroebner compute(F field, int nvars, ModuleOrder order, const std::vector<Vec>& gens, int dmax = -1) {
    ModuleGroebner G(std::move(field), nvars, std::move(order));
    G.run(gens, dmax);
    return G;
  }

  const F& field() const noexcept { return f_; }
  int nvars() const noexcept { return n_; }
  const ModuleOrder& order() const noexcept { return ord_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  /// True when every S-pair was processed, so the basis is a full Groebner basis.
  bool complete() const noexcept { return complete_; }
  /// Degree through which the basis is known to be exact.
  int exact_through() const noexcept { return complete_ ? -1 : dmax_; }

  bool is_standard(const ModuleTerm& t) const { return reducer(t) < 0; }

  Vec normal_form(Vec v) const {
    Vec out;
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto [t, c] = v[pos];
      const int k = reducer(t);
      if (k < 0) {
        out.push_back(v[pos++]);
        continue;
      }
      const auto& g = basis_[k];
      const Vec tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
      v = sub_multiple(f_, ord_, tail, f_.div(c, g.front().second), g.front().first.mon.cofactor(t.mon), g);
      pos = 0;
    }
    return out;
  }

  bool reduces_to_zero(const Vec& v) const { return normal_form(v).empty(); }

  /// Standard terms of one degree, listed in descending order.
  std::vector<ModuleTerm> standard_terms(int d) const {
    std::vector<ModuleTerm> out;
    for (int k = 0; k < ord_.rank(); ++k) {
      const int dm = d - ord_.shift(k);
      if (dm < 0) continue;
      const MonomialBasis mons(n_, dm);
      for (const auto& m : mons.monomials())
        if (is_standard({m, k})) out.push_back({m, k});
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord_.greater(a, b); });
    return out;
  }

  std::vector<std::int64_t> hilbert(int dmax) const {
    require(complete_ || dmax <= dmax_, ErrorCode::CapTooSmall, "basis is only exact through degree " +
                                                                       std::to_string(dmax_));
    std::vector<std::int64_t> h(dmax + 1, 0);
    for (int d = 0; d <= dmax; ++d) h[d] = static_cast<std::int64_t>(standard_terms(d).size());
    return h;
  }

  /// Largest internal degree of lcm(leading terms) within a component; bounds the Betti degrees of the quotient.
  int lcm_degree_bound() const {
    int best = 0;
    for (int k = 0; k < ord_.rank(); ++k) {
      if (lts_[k].empty()) continue;
      Monomial l = Monomial::one();
      for (const auto& m : lts_[k]) l = l.lcm(m);
      best = std::max(best, l.degree() + ord_.shift(k));
    }
    return best;
  }

  /// True when every component contains a pure power of every variable among its leading terms.
  bool quotient_finite() const {
    for (int k = 0; k < ord_.rank(); ++k)
      for (int i = 0; i < n_; ++i) {
        bool found = false;
        for (const auto& m : lts_[k])
          if (m.degree() == m[i]) found = true;
        if (!found) return false;
      }
    return true;
  }

 private:
  struct Pair {
    int i, j;
  };

  int reducer(const ModuleTerm& t) const {
    const auto& list = lts_[t.comp];
    for (std::size_t k = 0; k < list.size(); ++k)
      if (list[k].divides(t.mon)) return lts_index_[t.comp][k];
    return -1;
  }

  void add(Vec v) {
    const auto inv = f_.inv(v.front().second);
    for (auto& [t, c] : v) c = f_.mul(c, inv);
    const int idx = static_cast<int>(basis_.size());
    const ModuleTerm lt = v.front().first;
    for (int k = 0; k < idx; ++k) {
      if (basis_[k].front().first.comp != lt.comp) continue;
      const int deg = ord_.degree({basis_[k].front().first.mon.lcm(lt.mon), lt.comp});
      queue_[deg].push_back({k, idx});
      pending_.insert({k, idx});
    }
    lts_[lt.comp].push_back(lt.mon);
    lts_index_[lt.comp].push_back(idx);
    basis_.push_back(std::move(v));
  }

  bool chain_criterion(const Pair& p, const Monomial& l, int comp) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const int kk = static_cast<int>(k);
      if (kk == p.i || kk == p.j) continue;
      const auto& lt = basis_[k].front().first;
      if (lt.comp != comp || !lt.mon.divides(l)) continue;
      if (pending_.count({std::min(p.i, kk), std::max(p.i, kk)})) continue;
      if (pending_.count({std::min(p.j, kk), std::max(p.j, kk)})) continue;
      return true;
    }
    return false;
  }

  Vec spoly(const Pair& p) const {
    const auto& a = basis_[p.i];
    const auto& b = basis_[p.j];
    const Monomial l = a.front().first.mon.lcm(b.front().first.mon);
    Vec sa = sub_multiple(f_, ord_, Vec{}, f_.neg(f_.one()), a.front().first.mon.cofactor(l), a);
    return sub_multiple(f_, ord_, sa, f_.one(), b.front().first.mon.cofactor(l), b);
  }

  void run(const std::vector<Vec>& gens, int dmax) {
    std::map<int, std::vector<Vec>> input;
    for (const auto& g : gens) {
      if (g.empty()) continue;
      const int d = ord_.degree(g.front().first);
      for (const auto& [t, c] : g)
        require(ord_.degree(t) == d, ErrorCode::InhomogeneousGenerator, "generator is not homogeneous");
      input[d].push_back(g);
    }
    lts_index_.assign(ord_.rank(), {});
    dmax_ = dmax;
    while (!input.empty() || !queue_.empty()) {
      int d = input.empty() ? queue_.begin()->first : input.begin()->first;
      if (!queue_.empty()) d = std::min(d, queue_.begin()->first);
      if (dmax >= 0 && d > dmax) {
        complete_ = false;
        return;
      }
      if (auto it = queue_.find(d); it != queue_.end()) {
        auto pairs = std::move(it->second);
        queue_.erase(it);
        for (const auto& p : pairs) {
          const auto& ta = basis_[p.i].front().first;
          const Monomial l = ta.mon.lcm(basis_[p.j].front().first.mon);
          const bool skip = chain_criterion(p, l, ta.comp);
          pending_.erase({p.i, p.j});
          if (skip) continue;
          auto h = normal_form(spoly(p));
          if (!h.empty()) add(std::move(h));
        }
      }
      if (auto it = input.find(d); it != input.end()) {
        auto vs = std::move(it->second);
        input.erase(it);
        for (auto& v : vs) {
          auto h = normal_form(std::move(v));
          if (!h.empty()) add(std::move(h));
        }
      }
    }
    complete_ = true;
  }

  F f_;
  int n_;
  ModuleOrder ord_;
  std::vector<Vec> basis_;
  std::vector<std::vector<Monomial>> lts_;
  std::vector<std::vector<int>> lts_index_;
  std::map<int, std::vector<Pair>> queue_;
  std::set<std::pair<int, int>> pending_;
  bool complete_ = false;
  int dmax_ = -1;
};

/// Graded pieces of F/U on standard-term bases, with linear maps induced by term-wise operators.
template <class F>
class GroebnerQuotient {
 public:
  using Elem = typename F::Elem;
  using Vec = ModuleVec<F>;

  explicit GroebnerQuotient(ModuleGroebner<F> gb) : gb_(std::move(gb)) {}

  const ModuleGroebner<F>& groebner() const noexcept { return gb_; }
  const F& field() const noexcept { return gb_.field(); }
  int nvars() const noexcept { return gb_.nvars(); }

  const std::vector<ModuleTerm>& terms(int d) const {
    auto it = cache_.find(d);
    if (it == cache_.end()) {
      Slice s;
      s.terms = d < 0 ? std::vector<ModuleTerm>{} : gb_.standard_terms(d);
      for (std::size_t i = 0; i < s.terms.size(); ++i) s.index[key(s.terms[i])] = i;
      it = cache_.emplace(d, std::move(s)).first;
    }
    return it->second.terms;
  }
  std::size_t dim(int d) const { return terms(d).size(); }

  /// Coordinates of the normal form of a homogeneous vector of degree d.
  std::vector<Elem> coordinates(const Vec& v, int d) const {
    const auto& ts = terms(d);
    std::vector<Elem> out(ts.size(), field().zero());
    const auto& idx = cache_.at(d).index;
    for (const auto& [t, c] : gb_.normal_form(v)) out[idx.at(key(t))] = c;
    return out;
  }

  /// Matrix of op : Q_from -> Q_to on standard-term bases (columns are images).
  Matrix<F> map(int from, int to, const std::function<Vec(const ModuleTerm&)>& op) const {
    const auto& src = terms(from);
    const std::size_t rows = dim(to);
    Matrix<F> out(field(), rows, src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto col = coordinates(op(src[c]), to);
      for (std::size_t r = 0; r < rows; ++r) out(r, c) = col[r];
    }
    return out;
  }

  Matrix<F> mul_map(int j, int d) const {
    return map(d, d + 1, [&](const ModuleTerm& t) {
      return Vec{{ModuleTerm{t.mon * Monomial::var(j), t.comp}, field().one()}};
    });
  }

 private:
  struct Slice {
    std::vector<ModuleTerm> terms;
    std::unordered_map<std::uint64_t, std::size_t> index;
  };
  static std::uint64_t key(const ModuleTerm& t) { return t.mon.key() * 131 + static_cast<std::uint64_t>(t.comp); }

  ModuleGroebner<F> gb_;
  mutable std::map<int, Slice> cache_;
};

/// Hilbert function of (free module of the given rank) / (submodule generated by gens), degrees 0..dmax.
template <class F>
std::vector<std::int64_t> quotient_hilbert(const F& f, int nvars, const std::vector<std::vector<Poly<F>>>& gens, int dmax,
                                           ModuleOrder order = ModuleOrder()) {
  std::vector<ModuleVec<F>> vs;
  for (const auto& g : gens) vs.push_back(module_vec(g, order));
  return ModuleGroebner<F>::compute(f, nvars, order, vs, dmax).hilbert(dmax);
}

/// Ideal version: generators are polynomials.
template <class F>
std::vector<std::int64_t> quotient_hilbert(const F& f, int nvars, const std::vector<Poly<F>>& gens, int dmax) {
  std::vector<std::vector<Poly<F>>> wrapped;
  for (const auto& g : gens) wrapped.push_back({g});
  return quotient_hilbert(f, nvars, wrapped, dmax);
}

template <class F>
ModuleGroebner<F> ideal_groebner(const F& f, int nvars, const std::vector<Poly<F>>& gens, int dmax = -1) {
  std::vector<ModuleVec<F>> vs;
  const ModuleOrder ord;
  for (const auto& g : gens) vs.push_back(module_vec(std::vector<Poly<F>>{g}, ord));
  return ModuleGroebner<F>::compute(f, nvars, ord, vs, dmax);
}

}  // namespace cherednik
