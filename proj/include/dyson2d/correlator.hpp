#pragma once

// Exact evaluation of the beta = 1 partition function and of the pair
// correlator e_N(eps) = < sum_{i<j} |z_i - z_j|^{2 eps} > at natural eps.
//
// Two independent routes are provided: the reduced double sum over index
// pairs (a, b), and a literal permutation expansion of both Vandermonde
// factors combined with the Gaussian moment rule
//     integral d^2z z^i conj(z)^j exp(-|z|^2) = pi delta_ij i!
// The second route is exponentially expensive and exists to validate the
// first one on small instances.

#include <vector>

#include "dyson2d/exact.hpp"

namespace dyson2d {

struct CorrelatorQuery {
    unsigned n;    // particle count N >= 2
    unsigned eps;  // replica exponent >= 0
};

// Z_N(1) = prod_{k=1..N} k!,  N >= 1.
Integer partition_beta1(unsigned n);

// e_N(eps) via the pair-indexed double sum; exact integer.
Integer e_formula(const CorrelatorQuery& q);

// e_N(eps) via full permutation-pair expansion; exact integer.
// Guarded: n <= 6 and eps <= 4 (cost grows as (N!)^2 eps^2).
Integer e_oracle(const CorrelatorQuery& q);

// Rows N = 2..n_max, columns eps = 1..eps_max (empty columns for eps_max = 0),
// computed via e_formula.
std::vector<std::vector<Integer>> e_table(unsigned n_max, unsigned eps_max);

}  // namespace dyson2d
