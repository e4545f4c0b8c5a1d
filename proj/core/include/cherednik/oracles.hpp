#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cherednik/series.hpp"
#include "cherednik/tableau.hpp"

namespace cherednik {

/// prod over boxes of lambda of (1 - t^hook).
IntPoly hook_polynomial(const Partition& lambda);

/// (t)_n = (1 - t)(1 - t^2)...(1 - t^n).
IntPoly q_pochhammer(int n);

/// Number of standard tableaux of shape lambda (hook length formula).
std::int64_t standard_tableaux_count(const Partition& lambda);

/// Hilbert series of L(tau) for G(m,1,n) with tau the Specht module S_lambda pulled back:
/// dim(tau) H_lambda(t^m) / (1-t)^n for hbar = 0 and dim(tau) H_lambda(t^{mp}) / (1-t)^n for hbar = 1.
GradedSeries closed_hilbert_wreath(const Partition& lambda, int m, int n, int hbar, int p, int N);

/// Trivial-representation series for G(m,r,n) at hbar = 0:
/// (1-t^m)(1-t^{2m})...(1-t^{(n-1)m})(1-t^{nm/r}) / (1-t)^n.
GradedSeries closed_hilbert_trivial(int m, int r, int n, int N);

/// Series of L(rho) for G(m,m,2) at generic parameters, hbar = 0, p not dividing 2m; rho named as in
/// dihedral_irreducibles. One-dimensional rho give (1+t)(1+...+t^{m-1}); rho:1 and, for even m > 4, rho:{m/2-1}
/// give 2+2t+2t^2 (2+4t+2t^2 when m = 4); every other rho:i gives 2.
std::optional<IntPoly> closed_hilbert_dihedral(int m, const std::string& rho);

}  // namespace cherednik
