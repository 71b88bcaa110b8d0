#pragma once

// Arbitrary-precision decimal values with an explicit working-digit count.
// Thin RAII wrapper over MPFR: every operation is correctly rounded at the
// wider of the operand precisions, so each step costs at most one unit in
// the last working digit.
//
// The transcendental constants gamma, ln 2, pi and sqrt(pi) are embedded as
// literal digit strings (110 digits); requests beyond max_digits() are
// rejected rather than silently degraded.

#include <mpfr.h>

#include <string>

#include "dyson2d/exact.hpp"

namespace dyson2d {

class Real {
  public:
    Real();                        // 0 at default (20-digit) working precision
    explicit Real(unsigned digits);  // 0 at the given working precision
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    // Largest working-digit count supported by the embedded constants.
    static unsigned max_digits();

    static Real of_long(long v, unsigned digits);
    static Real of_rational(const Rational& q, unsigned digits);
    static Real euler_gamma(unsigned digits);
    static Real ln2(unsigned digits);
    static Real pi(unsigned digits);
    static Real sqrt_pi(unsigned digits);
    // ln n for an integer n >= 1, computed at runtime to working precision.
    static Real ln_uint(unsigned long n, unsigned digits);
    // n^(halves/2) for integer n >= 1 (half-integer powers of N).
    static Real pow_halves(unsigned long n, int halves, unsigned digits);

    unsigned digits() const { return digits_; }

    Real operator-() const;
    Real abs() const;
    int sign() const;  // -1, 0, +1

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    bool operator<(const Real& o) const;
    bool operator>(const Real& o) const;
    bool operator<=(const Real& o) const;
    bool operator>=(const Real& o) const;
    bool operator==(const Real& o) const;

    double to_double() const;
    // Plain decimal rendering with the given number of significant digits.
    std::string str(unsigned sig_digits) const;
    std::string str() const { return str(digits_); }

    // Direct access for module internals (quadrature, powers, ...).
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
    unsigned digits_;
};

}  // namespace dyson2d
