#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/field.hpp"
#include "cherednik/group.hpp"
#include "cherednik/lmodule.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rep.hpp"

namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
  /// Extra lines printed under a failing criterion.
  std::vector<std::string> analysis;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

std::vector<Criterion> dihedral_criteria();
std::vector<Criterion> rank_criteria();
std::vector<Criterion> misc_criteria();

std::string fixture_path(const std::string& name);

// Reference series arithmetic, kept separate from the library's IntPoly.
using Coeffs = std::vector<std::int64_t>;

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Coeffs ones(int k) { return Coeffs(static_cast<std::size_t>(k), 1); }

inline Coeffs scale(Coeffs a, std::int64_t s) {
  for (auto& x : a) x *= s;
  return a;
}

inline Coeffs trim(Coeffs a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::string str(const Coeffs& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
  os << "]";
  return os.str();
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

using Engine = cherednik::VermaEngine<cherednik::FiniteField>;

inline std::shared_ptr<Engine> make_engine(int m, int r, int n, std::uint32_t p, const std::string& tau, int hbar = 0,
                                           std::uint64_t seed = 1) {
  using namespace cherednik;
  const GroupSpec G(m, r, n);
  const FiniteField F = FiniteField::with_roots(p, m, 1, kGenericFieldSize);
  return std::make_shared<Engine>(G, builtin_rep(G, tau, F), F, specialized_params(G, F, hbar, seed));
}

}  // namespace acceptance
