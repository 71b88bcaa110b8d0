#include "dyson2d/asymptotics.hpp"

#include <algorithm>

#include "dyson2d/closed_form.hpp"

namespace dyson2d {

const std::vector<AsymptoticTerm>& asymptotic_terms() {
    static const std::vector<AsymptoticTerm> terms = {
        {4, true, make_rational(1, 2), Rational(0), Rational(0)},
        {4, false, make_rational(-1, 4), Rational(0), Rational(0)},
        {2, false, make_rational(1, 2), make_rational(1, 2), Rational(0)},
        {1, false, Rational(0), Rational(0), make_rational(-4, 3)},
        {0, false, make_rational(5, 24), Rational(0), Rational(0)},
        {-1, false, Rational(0), Rational(0), make_rational(1, 30)},
        {-3, false, Rational(0), Rational(0), make_rational(-107, 3360)},
        {-4, false, make_rational(1, 240), Rational(0), Rational(0)},
    };
    return terms;
}

Real asymptotic_term_value(const AsymptoticTerm& t, unsigned n, unsigned digits) {
    if (n < 2) throw std::invalid_argument("asymptotic_term_value: n must be >= 2");
    const unsigned wd = std::min(digits + 8, Real::max_digits());
    Real c = Real::of_rational(t.coeff_one, wd);
    if (sgn(t.coeff_gamma) != 0)
        c += Real::of_rational(t.coeff_gamma, wd) * Real::euler_gamma(wd);
    if (sgn(t.coeff_inv_sqrt_pi) != 0)
        c += Real::of_rational(t.coeff_inv_sqrt_pi, wd) / Real::sqrt_pi(wd);
    Real v = c * Real::pow_halves(n, t.power_halves, wd);
    if (t.is_log) v *= Real::ln_uint(n, wd);
    return v;
}

Real energy_asymptotic(unsigned n, int truncate_after_halves, unsigned digits) {
    if (n < 2) throw std::invalid_argument("energy_asymptotic: n must be >= 2");
    const auto& terms = asymptotic_terms();
    const bool known = std::any_of(terms.begin(), terms.end(), [&](const AsymptoticTerm& t) {
        return t.power_halves == truncate_after_halves;
    });
    if (!known) throw std::invalid_argument("energy_asymptotic: unknown truncation power");
    const unsigned wd = std::min(digits + 8, Real::max_digits());
    Real sum(wd);
    for (const auto& t : terms)
        if (t.power_halves >= truncate_after_halves) sum += asymptotic_term_value(t, n, wd);
    return sum;
}

ConstExpr tail_constant() {
    return ConstExpr::of(make_rational(7, 8), Rational(0), make_rational(-1, 2));
}

Real kernel_term_real(unsigned long k, unsigned digits) {
    if (k < 2) throw std::invalid_argument("kernel_term_real: k must be >= 2");
    const unsigned wd = std::min(digits + 8, Real::max_digits());
    // exp(lgamma(k+3/2) - lgamma(3/2) - lgamma(k+2)) / (k (k-1))
    Real r(wd);
    mpfr_t a, b;
    mpfr_init2(a, mpfr_get_prec(r.raw()));
    mpfr_init2(b, mpfr_get_prec(r.raw()));
    int sign_unused;
    mpfr_set_ui(a, k, MPFR_RNDN);
    mpfr_add_d(a, a, 1.5, MPFR_RNDN);
    mpfr_lgamma(a, &sign_unused, a, MPFR_RNDN);
    mpfr_set_d(b, 1.5, MPFR_RNDN);
    mpfr_lgamma(b, &sign_unused, b, MPFR_RNDN);
    mpfr_sub(a, a, b, MPFR_RNDN);
    mpfr_set_ui(b, k + 2, MPFR_RNDN);
    mpfr_lngamma(b, b, MPFR_RNDN);
    mpfr_sub(a, a, b, MPFR_RNDN);
    mpfr_exp(a, a, MPFR_RNDN);
    mpfr_div_ui(a, a, k, MPFR_RNDN);
    mpfr_div_ui(a, a, k - 1, MPFR_RNDN);
    mpfr_set(r.raw(), a, MPFR_RNDN);
    mpfr_clears(a, b, (mpfr_ptr)0);
    return r;
}

Real summand_expansion_check(unsigned k_min, unsigned k_max) {
    if (k_min < 10 || k_min >= k_max)
        throw std::invalid_argument("summand_expansion_check: need 10 <= k_min < k_max");
    const unsigned wd = 40;
    const Real sqrtpi = Real::sqrt_pi(wd);
    Real max_dev(wd);
    for (unsigned k = k_min; k <= k_max; ++k) {
        const Real w = Real::of_rational(kernel_term(k), wd);
        Real e = Real::of_long(2, wd) * Real::pow_halves(k, -5, wd);
        e += Real::of_rational(make_rational(3, 4), wd) * Real::pow_halves(k, -7, wd);
        e += Real::of_rational(make_rational(121, 64), wd) * Real::pow_halves(k, -9, wd);
        e /= sqrtpi;
        const Real dev = (w - e).abs() * Real::pow_halves(k, 11, wd) * sqrtpi;
        if (dev > max_dev) max_dev = dev;
    }
    return max_dev;
}

PartialSumCheck partial_sum_expansion_check(const std::vector<unsigned>& n_values) {
    const unsigned wd = 40;
    const Real sqrtpi = Real::sqrt_pi(wd);
    const Real c = tail_constant().eval(wd);
    PartialSumCheck out{Real(wd), Real(wd)};
    for (unsigned n : n_values) {
        if (n < 10) throw std::invalid_argument("partial_sum_expansion_check: all n must be >= 10");
        const Rational s_product = finite_sum_S(n);
        const Rational pairs = make_rational(static_cast<long>(n) * (static_cast<long>(n) - 1));
        const Rational s_plain = s_product / pairs;

        // plain form, expanded in the upper summation limit L = n-1
        const unsigned long L = n - 1;
        Real plain = c;
        plain -= Real::of_rational(make_rational(4, 3), wd) / sqrtpi * Real::pow_halves(L, -3, wd);
        plain += Real::of_rational(make_rational(7, 10), wd) / sqrtpi * Real::pow_halves(L, -5, wd);
        plain -= Real::of_rational(make_rational(391, 672), wd) / sqrtpi * Real::pow_halves(L, -7, wd);
        const Real dev_plain =
            (Real::of_rational(s_plain, wd) - plain).abs() * Real::pow_halves(L, 9, wd) * sqrtpi;
        if (dev_plain > out.max_scaled_dev_plain) out.max_scaled_dev_plain = dev_plain;

        // product form, expanded in N
        Real prod = Real::of_rational(pairs, wd) * c;
        prod -= Real::of_rational(make_rational(4, 3), wd) / sqrtpi * Real::pow_halves(n, 1, wd);
        prod += Real::of_rational(make_rational(1, 30), wd) / sqrtpi * Real::pow_halves(n, -1, wd);
        prod -= Real::of_rational(make_rational(107, 3360), wd) / sqrtpi * Real::pow_halves(n, -3, wd);
        const Real dev_prod =
            (Real::of_rational(s_product, wd) - prod).abs() * Real::pow_halves(n, 5, wd) * sqrtpi;
        if (dev_prod > out.max_scaled_dev_product) out.max_scaled_dev_product = dev_prod;
    }
    return out;
}

}  // namespace dyson2d
