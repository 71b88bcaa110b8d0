#include "dyson2d/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace dyson2d {

namespace {

// 110 correctly-rounded decimal digits each.
constexpr const char* kEulerGamma =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495"
    "1463144725";
constexpr const char* kLn2 =
    "0.6931471805599453094172321214581765680755001343602552541206800094933936219696947156058633269964186875"
    "4200148102";
constexpr const char* kPi =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"
    "821480865";
constexpr const char* kSqrtPi =
    "1.7724538509055160272981674833411451827975494561223871282138077898529112845910321813749506567385446654"
    "162268236";

constexpr unsigned kMaxDigits = 96;

mpfr_prec_t bits_for(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623) + 24);
}

void check_digits(unsigned digits) {
    if (digits == 0) throw std::invalid_argument("Real: working digits must be >= 1");
    if (digits > kMaxDigits)
        throw std::invalid_argument("Real: requested digits exceed embedded constant precision");
}

Real from_literal(const char* literal, unsigned digits) {
    Real r(digits);
    mpfr_set_str(r.raw(), literal, 10, MPFR_RNDN);
    return r;
}

}  // namespace

Real::Real() : Real(20u) {}

Real::Real(unsigned digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

unsigned Real::max_digits() { return kMaxDigits; }

Real Real::of_long(long v, unsigned digits) {
    Real r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of_rational(const Rational& q, unsigned digits) {
    Real r(digits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::euler_gamma(unsigned digits) { check_digits(digits); return from_literal(kEulerGamma, digits); }
Real Real::ln2(unsigned digits) { check_digits(digits); return from_literal(kLn2, digits); }
Real Real::pi(unsigned digits) { check_digits(digits); return from_literal(kPi, digits); }
Real Real::sqrt_pi(unsigned digits) { check_digits(digits); return from_literal(kSqrtPi, digits); }

Real Real::ln_uint(unsigned long n, unsigned digits) {
    if (n == 0) throw std::invalid_argument("Real::ln_uint: n must be >= 1");
    Real r(digits);
    mpfr_set_ui(r.v_, n, MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow_halves(unsigned long n, int halves, unsigned digits) {
    if (n == 0) throw std::invalid_argument("Real::pow_halves: n must be >= 1");
    Real r(digits);
    mpfr_t e;
    mpfr_init2(e, 64);
    mpfr_set_si(e, halves, MPFR_RNDN);
    mpfr_div_2ui(e, e, 1, MPFR_RNDN);  // exact
    mpfr_set_ui(r.v_, n, MPFR_RNDN);
    mpfr_pow(r.v_, r.v_, e, MPFR_RNDN);
    mpfr_clear(e);
    return r;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

int Real::sign() const { return mpfr_sgn(v_); }

namespace {
Real bin_op(const Real& a, const Real& b,
            int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    Real r(std::max(a.digits(), b.digits()));
    op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
}  // namespace

Real operator+(const Real& a, const Real& b) { return bin_op(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return bin_op(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return bin_op(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) {
    if (b.sign() == 0) throw std::domain_error("Real: division by zero");
    return bin_op(a, b, mpfr_div);
}

Real& Real::operator+=(const Real& o) { *this = *this + o; return *this; }
Real& Real::operator-=(const Real& o) { *this = *this - o; return *this; }
Real& Real::operator*=(const Real& o) { *this = *this * o; return *this; }
Real& Real::operator/=(const Real& o) { *this = *this / o; return *this; }

bool Real::operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
bool Real::operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
bool Real::operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
bool Real::operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
bool Real::operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::str(unsigned sig_digits) const {
    if (sig_digits == 0) sig_digits = 1;
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return "nan";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, sig_digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }

    // mant has sig_digits digits; value = 0.mant * 10^exp10
    std::string out;
    if (exp10 > static_cast<mpfr_exp_t>(sig_digits) + 6 || exp10 < -6) {
        // fall back to scientific form for extreme magnitudes
        out = mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
        // strip trailing zeros of the fraction
        auto epos = out.find('e');
        auto frac_end = out.find_last_not_of('0', epos - 1);
        if (out[frac_end] == '.') --frac_end;
        out = out.substr(0, frac_end + 1) + out.substr(epos);
    } else if (exp10 <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    } else if (static_cast<size_t>(exp10) >= mant.size()) {
        out = mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<size_t>(exp10)) + "." + mant.substr(static_cast<size_t>(exp10));
    }

    // trim a trailing '.' or trailing fraction zeros (keep integers clean)
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        auto last = out.find_last_not_of('0');
        if (out[last] == '.') --last;
        out = out.substr(0, last + 1);
    }
    return sign + out;
}

}  // namespace dyson2d
