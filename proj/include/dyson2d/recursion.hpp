#pragma once

// The two third-order difference equations: the homogeneous one satisfied by
// e_N(eps) and the inhomogeneous one satisfied by the mean energy E_N(1).
// Residual evaluation is exact; forward solving extends the energy sequence
// from its three initial values.

#include <array>
#include <utility>
#include <vector>

#include "dyson2d/const_expr.hpp"
#include "dyson2d/exact.hpp"

namespace dyson2d {

// Four consecutive sequence values, indices n, n+1, n+2, n+3.
template <class T>
struct RecursionWindow {
    unsigned n;
    std::array<T, 4> values;
};

// Signed window coefficients of the e_N(eps) recursion at base index n.
std::array<Rational, 4> e_recursion_coeffs(unsigned n, unsigned eps);

// Left-hand side of the e recursion on the window; zero iff satisfied.
Rational e_recursion_residual(const RecursionWindow<Rational>& w, unsigned eps);
Rational e_recursion_residual_with(const std::array<Rational, 4>& coeffs,
                                   const RecursionWindow<Rational>& w);

struct EnergyRecursionCoeffs {
    std::array<Rational, 4> window;  // signed coefficients of E_n .. E_{n+3}
    Rational inhomogeneous;          // the (3n+5)(n+1) source term
};

EnergyRecursionCoeffs energy_recursion_coeffs(unsigned n);

// Exact residual including the inhomogeneous term; the window must carry no
// ln N component (the unrescaled energy has none).
ConstExpr energy_recursion_residual(const RecursionWindow<ConstExpr>& w);
ConstExpr energy_recursion_residual_with(const EnergyRecursionCoeffs& coeffs,
                                         const RecursionWindow<ConstExpr>& w);

// E_2..E_{n_max} seeded with the three known initial values and extended by
// solving the recursion for E_{n+3}. n_max >= 4. Index 0 holds E_2.
std::vector<ConstExpr> solve_energy_forward(unsigned n_max);

// General 3-parameter solution of the homogeneous-plus-source equation:
//   n^2/2 * digamma(n) + 1/4 + c1*n + c2*n^2 + c3 * S(n)
// where S(n) is the finite hypergeometric-kernel sum (empty for n = 2).
// The constants may carry gamma / ln 2 parts, as the fitted ones do.
ConstExpr generic_solution(unsigned n, const ConstExpr& c1, const ConstExpr& c2,
                           const ConstExpr& c3);

// Consistency of the eps expansion e_N(eps) = N(N-1)/2 + eps E_N(1) + O(eps^2)
// with the e recursion: substituting the truncated expansion into the e
// recursion must produce a zero coefficient at order eps^0 and, given true
// energies E_n..E_{n+3}, at order eps^1 as well (where the energy recursion's
// source term emerges). Returns the two coefficients.
std::pair<ConstExpr, ConstExpr> eps_expansion_coefficients(
    unsigned n, const std::array<ConstExpr, 4>& energies);

}  // namespace dyson2d
