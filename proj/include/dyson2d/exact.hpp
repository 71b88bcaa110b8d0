#pragma once

// Exact integer / rational arithmetic used by every other module.
// Backed by GMP; all results are exact, rationals always in lowest terms
// with positive denominator (mpq canonical form).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dyson2d {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an operation exceeds a documented size guard
// (e.g. the permutation-expansion correlator at large N).
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an iterative evaluation cannot certify its target accuracy
// within its iteration caps.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// num/den reduced to lowest terms, den > 0. den == 0 rejected.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// n!
Integer factorial(unsigned long n);

// C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

// (x+1)(x+2)...(x+m) = (x+m)!/x!  (empty product = 1)
Integer rising_factorial(unsigned long x, unsigned long m);

// H_n = sum_{k=1..n} 1/k, exact.  n == 0 rejected.
Rational harmonic(unsigned long n);

// prod_{j=1..k} (j + 1/2) = Gamma(k + 3/2) / Gamma(3/2), exact rational.
Rational gamma_half_ratio(unsigned long k);

// Parses "p/q" or "p" (arbitrary precision, optional sign). Throws on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace dyson2d
