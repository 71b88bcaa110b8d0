#include "dyson2d/exact.hpp"

namespace dyson2d {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer rising_factorial(unsigned long x, unsigned long m) {
    Integer r(1);
    for (unsigned long j = 1; j <= m; ++j) r *= Integer(x + j);
    return r;
}

Rational harmonic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("harmonic: n must be >= 1");
    Rational h(0);
    for (unsigned long k = 1; k <= n; ++k) h += make_rational(1, static_cast<long>(k));
    return h;
}

Rational gamma_half_ratio(unsigned long k) {
    // prod (j + 1/2) = (2k+1)!! / 2^k
    Integer num(1);
    for (unsigned long j = 1; j <= k; ++j) num *= Integer(2 * j + 1);
    Integer den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return make_rational(num, den);
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rational_from_string: malformed rational '" + s + "'");
    if (sgn(Integer(q.get_den())) == 0)
        throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace dyson2d
