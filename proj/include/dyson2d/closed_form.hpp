#pragma once

// The exact finite-N mean energy and its hypergeometric identity.
//
// The primary computation path for energies is the exact finite sum; the
// 3F2 evaluator exists to validate the identity connecting that sum to the
// hypergeometric form, and is computed independently of it: partial sums of
// the series are accumulated as exact rationals and the remaining tail is
// captured by an exact telescoping certificate with a proven rational error
// bound (direct summation alone cannot certify 20+ digits here -- the terms
// decay only like m^{-5/2}).

#include <vector>

#include "dyson2d/const_expr.hpp"
#include "dyson2d/exact.hpp"
#include "dyson2d/real.hpp"

namespace dyson2d {

struct Hyp3F2Query {
    unsigned n;       // parameter N >= 2
    unsigned digits;  // requested correct decimal digits
};

struct EnergyReport {
    unsigned n;
    ConstExpr exact;
    Real numeric;
    ConstExpr rescaled_exact;
    Real rescaled_numeric;
};

// Summand of the kernel sum at index k >= 2 (without the N(N-1) prefactor):
//   gamma_half_ratio(k) / ((k+1)! k (k-1)),  exact and positive.
Rational kernel_term(unsigned long k);

// S(n) = sum_{k=2}^{n-1} n(n-1) * kernel_term(k), exact (empty for n = 2).
Rational finite_sum_S(unsigned n);

// The fitted constants of the generic solution:
// c1 = 13/8 + gamma/2 - ln2/2, c2 = -9/8 + ln2/2, c3 = 1.
std::array<ConstExpr, 3> fitted_constants();

// E_n(1) = n^2/2 digamma(n) + 1/4 + c1 n + c2 n^2 + S(n); no ln N component.
ConstExpr energy_exact(unsigned n);

// E_n(1) - n(n-1)/2 * ln n, carried exactly with n_ref = n.
ConstExpr energy_rescaled(unsigned n);

// Exact-rational approximation of 3F2(1, N-1, N+3/2; N+2, N+1 | 1) together
// with a certified bound on |true value - value|.
struct Hyp3F2Result {
    Rational value;
    Rational error_bound;
    unsigned direct_terms;      // series terms summed exactly
    unsigned certificate_order; // telescoping order used for the tail
};

Hyp3F2Result hyp3f2_exact(const Hyp3F2Query& q);

// Decimal rendering of hyp3f2_exact; total error below 10^-(digits).
Real hyp3f2(const Hyp3F2Query& q);

// First `count` partial sums of the series, exact (all terms positive).
std::vector<Rational> hyp3f2_partial_sums(unsigned n, unsigned count);

// S(n) - [ n(n-1)/2 (7/4 - ln2) - Gamma(n+3/2)/(Gamma(n+2)Gamma(3/2)) 3F2 ],
// which must vanish to working precision.
Real hyp3f2_identity_residual(unsigned n, unsigned digits);

// The boxed closed form evaluated numerically:
//   n^2 digamma(n)/2 - n^2/4 + 3n/4 + 1/4 + n gamma/2 - prefactor * 3F2.
Real energy_boxed_numeric(unsigned n, unsigned digits);

EnergyReport energy_report(unsigned n, unsigned digits);

}  // namespace dyson2d
