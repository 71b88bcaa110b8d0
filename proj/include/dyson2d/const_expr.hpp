#pragma once

// Exact linear combinations over the basis {1, gamma, ln 2, ln N}.
// Every exact energy in this project is affine in these four constants, so
// the type supports addition, subtraction and rational scaling only --
// no product of two expressions is ever needed.

#include <optional>
#include <string>

#include "dyson2d/exact.hpp"
#include "dyson2d/real.hpp"

namespace dyson2d {

class ConstExpr {
  public:
    ConstExpr() = default;  // zero

    static ConstExpr rational(const Rational& q);
    static ConstExpr rational(long num, long den = 1);
    // q1 + qg*gamma + ql2*ln2 (no log-N component)
    static ConstExpr of(const Rational& q1, const Rational& qg, const Rational& ql2);
    // full form; qln nonzero requires n_ref >= 1
    static ConstExpr of(const Rational& q1, const Rational& qg, const Rational& ql2,
                        const Rational& qln, unsigned n_ref);

    const Rational& coeff_one() const { return one_; }
    const Rational& coeff_gamma() const { return gamma_; }
    const Rational& coeff_ln2() const { return ln2_; }
    const Rational& coeff_ln_n() const { return ln_n_; }
    // 0 when no ln N component is present.
    unsigned n_ref() const { return n_ref_; }

    bool is_zero() const;
    bool has_ln_n() const { return sgn(ln_n_) != 0; }

    ConstExpr operator-() const;
    ConstExpr operator+(const ConstExpr& o) const;
    ConstExpr operator-(const ConstExpr& o) const;
    // scaling by an exact rational
    ConstExpr operator*(const Rational& s) const;
    ConstExpr& operator+=(const ConstExpr& o);
    ConstExpr& operator-=(const ConstExpr& o);

    bool operator==(const ConstExpr& o) const;

    // q1 + qg*gamma + ql2*ln2 + qln*ln(n_ref) at the requested working digits.
    Real eval(unsigned digits) const;

    // Human-readable form, e.g. "5831/384 - 10*gamma + 10*ln2 - 10*ln(5)".
    std::string str() const;

  private:
    void normalize();

    Rational one_{0};
    Rational gamma_{0};
    Rational ln2_{0};
    Rational ln_n_{0};
    unsigned n_ref_ = 0;
};

inline ConstExpr operator*(const Rational& s, const ConstExpr& e) { return e * s; }

// digamma(n) = H_{n-1} - gamma for integer n >= 1 (H_0 = 0), exact.
ConstExpr digamma_int(unsigned long n);

// Alias for ConstExpr::eval, mirroring the operation vocabulary.
Real eval_const(const ConstExpr& e, unsigned digits);

}  // namespace dyson2d
