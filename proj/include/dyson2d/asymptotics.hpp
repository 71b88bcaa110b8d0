#pragma once

// Large-N expansion of the mean energy: the fixed term list down to N^-2,
// truncated evaluation, the tail constant of the kernel sum, and the
// empirical checks of the intermediate expansions.

#include <vector>

#include "dyson2d/const_expr.hpp"
#include "dyson2d/exact.hpp"
#include "dyson2d/real.hpp"

namespace dyson2d {

struct AsymptoticTerm {
    int power_halves;           // exponent of N in half units (4 = N^2, 1 = N^{1/2})
    bool is_log;                // true only for the N^2 ln N term
    Rational coeff_one;         // rational part
    Rational coeff_gamma;       // multiple of gamma
    Rational coeff_inv_sqrt_pi; // multiple of 1/sqrt(pi)
};

// The expansion terms in strictly decreasing power order (the log term
// leads its equal-power partner):
//   N^2 ln N / 2, -N^2/4, (1/2 + gamma/2) N, -4 N^{1/2}/(3 sqrt(pi)), 5/24,
//   N^{-1/2}/(30 sqrt(pi)), -107 N^{-3/2}/(3360 sqrt(pi)), N^{-2}/240.
const std::vector<AsymptoticTerm>& asymptotic_terms();

// Numeric value of one term at the given N.
Real asymptotic_term_value(const AsymptoticTerm& t, unsigned n, unsigned digits);

// Sum of all terms with power >= truncate_after (in half units). The cutoff
// must be one of the term powers; anything else is rejected.
Real energy_asymptotic(unsigned n, int truncate_after_halves, unsigned digits);

// Limit of the kernel sum: sum_{k>=2} kernel_term(k) = 7/8 - ln2/2.
ConstExpr tail_constant();

// Max over k in [k_min, k_max] of |kernel_term(k) - 3-term expansion|
// * k^{11/2} * sqrt(pi); bounded by the scale of the next coefficient.
Real summand_expansion_check(unsigned k_min, unsigned k_max);

// kernel_term(k) evaluated in floating precision via log-Gamma (usable far
// beyond the practical range of the exact rational route).
Real kernel_term_real(unsigned long k, unsigned digits);

struct PartialSumCheck {
    // deviation of sum_{k=2}^{n-1} kernel_term(k) from the 3-term expansion
    // in the upper summation limit n-1, scaled by (n-1)^{9/2} sqrt(pi)
    Real max_scaled_dev_plain;
    // deviation of the N(N-1)-multiplied sum from its displayed expansion in
    // N, scaled by N^{5/2} sqrt(pi)
    Real max_scaled_dev_product;
};

PartialSumCheck partial_sum_expansion_check(const std::vector<unsigned>& n_values);

}  // namespace dyson2d
