#include "dyson2d/closed_form.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dyson2d {

namespace {

// Term ratio of the kernel sequence: kernel_term(k+1) / kernel_term(k).
Rational kernel_ratio(unsigned long k) {
    const long K = static_cast<long>(k);
    return make_rational((K - 1) * (2 * K + 3), 2 * (K + 1) * (K + 2));
}

// ---- dense univariate polynomials over Rational (ascending powers) ----

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_shift(const Poly& a, size_t s) {
    Poly r(a.size() + s, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + s] = a[i];
    return r;
}

Rational poly_coeff(const Poly& a, size_t i) { return i < a.size() ? a[i] : Rational(0); }

Rational poly_eval(const Poly& a, const Rational& x) {
    Rational r(0);
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

// Exact Gaussian elimination; returns false if the system is inconsistent.
// Free variables are set to zero.
bool solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                  std::vector<Rational>& out) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivot_col(rows, cols);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational inv = make_rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            const Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (sgn(rhs[i]) != 0) return false;
    out.assign(cols, Rational(0));
    for (size_t i = 0; i < r; ++i) out[pivot_col[i]] = rhs[i];
    return true;
}

// ---- telescoping certificate for the series tail ----
//
// With t_{k+1}/t_k = rho(k) = (k-1)(2k+3) / (2(k+1)(k+2)), seek a rational
// R(k) = p(k)/k^J such that  eta(k) := 1 - R(k) + rho(k) R(k+1)  has a
// numerator of degree <= J+1 over the common denominator of degree 2J+2,
// so |eta(k)| <= A / (2 k^{J+1}) for k >= 1. Then exactly
//   sum_{k>=k0} t_k = R(k0) t_{k0} + sum_{k>=k0} t_k eta(k),
// and the correction sum is bounded through sum_{k>=k0} t_k <= (k0-1) t_{k0}
// (valid for k0 >= 7, where rho(k) <= 1 - 2/k gives a telescoping majorant).

struct TelescopeCertificate {
    unsigned order;         // J
    Poly p;                 // degree J+1
    Rational abs_coeff_sum; // A
    unsigned eta_decay;     // |eta(k)| <= A / (2 k^{eta_decay})
};

TelescopeCertificate build_certificate(unsigned J) {
    const size_t unknowns = J + 2;  // p_0 .. p_{J+1}

    Poly kp1_pow(J + 2, Rational(0));  // (k+1)^{J+1}
    for (size_t t = 0; t <= J + 1; ++t) kp1_pow[t] = Rational(binomial(J + 1, t));

    // B1 = 2 (k+1)^{J+1} (k+2)
    const Poly B1 = poly_mul(kp1_pow, Poly{Rational(4), Rational(2)});

    // B2 = (k-1)(2k+3) k^J = (2k^2 + k - 3) k^J
    const Poly B2 = poly_shift(Poly{Rational(-3), Rational(1), Rational(2)}, J);

    // Delta = k^J * B1
    const Poly Delta = poly_shift(B1, J);
    const size_t delta_deg = Delta.size() - 1;  // 2J + 2

    // binomial expansion coefficients of (k+1)^i for each unknown index i
    std::vector<Poly> shifted_b2(unknowns);  // sum_t C(i,t) B2 << t
    for (size_t i = 0; i < unknowns; ++i) {
        Poly acc(B2.size() + i, Rational(0));
        for (size_t t = 0; t <= i; ++t) {
            const Rational c{binomial(i, t)};
            for (size_t s = 0; s < B2.size(); ++s) acc[s + t] += c * B2[s];
        }
        shifted_b2[i] = std::move(acc);
    }

    auto assemble_numerator = [&](const Poly& p) {
        Poly nm = Delta;
        // - p(k) * B1
        const Poly pb1 = poly_mul(p, B1);
        if (nm.size() < pb1.size()) nm.resize(pb1.size(), Rational(0));
        for (size_t i = 0; i < pb1.size(); ++i) nm[i] -= pb1[i];
        // + p(k+1) * B2
        for (size_t i = 0; i < p.size(); ++i) {
            for (size_t s = 0; s < shifted_b2[i].size(); ++s) {
                if (nm.size() <= s) nm.resize(s + 1, Rational(0));
                nm[s] += p[i] * shifted_b2[i][s];
            }
        }
        return nm;
    };

    auto try_conditions = [&](size_t lowest_killed, TelescopeCertificate& cert) {
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> rhs;
        const size_t highest = delta_deg + 1;  // numerator degree can reach 2J+3
        for (size_t deg = lowest_killed; deg <= highest; ++deg) {
            std::vector<Rational> row(unknowns, Rational(0));
            for (size_t i = 0; i < unknowns; ++i) {
                Rational v = poly_coeff(shifted_b2[i], deg);
                if (deg >= i) v -= poly_coeff(B1, deg - i);
                row[i] = v;
            }
            m.push_back(std::move(row));
            rhs.push_back(-poly_coeff(Delta, deg));
        }
        std::vector<Rational> sol;
        if (!solve_linear(std::move(m), std::move(rhs), sol)) return false;
        Poly p(sol.begin(), sol.end());
        const Poly nm = assemble_numerator(p);
        for (size_t deg = lowest_killed; deg < nm.size(); ++deg)
            if (sgn(nm[deg]) != 0) return false;
        Rational a(0);
        for (size_t deg = 0; deg < lowest_killed && deg < nm.size(); ++deg) a += abs(nm[deg]);
        cert.order = J;
        cert.p = std::move(p);
        cert.abs_coeff_sum = a;
        cert.eta_decay = static_cast<unsigned>(delta_deg - (lowest_killed - 1));
        return true;
    };

    TelescopeCertificate cert;
    if (try_conditions(J + 2, cert)) return cert;  // |eta| <= A / (2 k^{J+1})
    if (try_conditions(J + 3, cert)) return cert;  // |eta| <= A / (2 k^J)
    throw ConvergenceError("hyp3f2: telescoping certificate construction failed");
}

const TelescopeCertificate& certificate(unsigned J) {
    static std::mutex mu;
    static std::map<unsigned, TelescopeCertificate> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(J);
    if (it == cache.end()) it = cache.emplace(J, build_certificate(J)).first;
    return it->second;
}

Rational pow_rational(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Rational kernel_term(unsigned long k) {
    if (k < 2) throw std::invalid_argument("kernel_term: k must be >= 2");
    return gamma_half_ratio(k) / make_rational(factorial(k + 1) * Integer(k) * Integer(k - 1),
                                               Integer(1));
}

Rational finite_sum_S(unsigned n) {
    if (n < 2) throw std::invalid_argument("finite_sum_S: n must be >= 2");
    Rational sum(0);
    if (n > 2) {
        Rational w = kernel_term(2);
        for (unsigned long k = 2; k < n; ++k) {
            sum += w;
            w *= kernel_ratio(k);
        }
    }
    const long N = static_cast<long>(n);
    return sum * make_rational(N * (N - 1));
}

std::array<ConstExpr, 3> fitted_constants() {
    return {ConstExpr::of(make_rational(13, 8), make_rational(1, 2), make_rational(-1, 2)),
            ConstExpr::of(make_rational(-9, 8), Rational(0), make_rational(1, 2)),
            ConstExpr::rational(1)};
}

ConstExpr energy_exact(unsigned n) {
    if (n < 2) throw std::invalid_argument("energy_exact: n must be >= 2");
    const Rational N = make_rational(static_cast<long>(n));
    const auto c = fitted_constants();
    ConstExpr r = digamma_int(n) * (N * N / 2);
    r += ConstExpr::rational(1, 4);
    r += c[0] * N;
    r += c[1] * (N * N);
    r += c[2] * finite_sum_S(n);
    return r;
}

ConstExpr energy_rescaled(unsigned n) {
    const long N = static_cast<long>(n);
    ConstExpr shift = ConstExpr::of(Rational(0), Rational(0), Rational(0),
                                    make_rational(-N * (N - 1), 2), n);
    return energy_exact(n) + shift;
}

Hyp3F2Result hyp3f2_exact(const Hyp3F2Query& q) {
    if (q.n < 2) throw std::invalid_argument("hyp3f2: n must be >= 2");
    if (q.digits == 0 || q.digits > Real::max_digits())
        throw std::invalid_argument("hyp3f2: unsupported digit count");

    // target: absolute error below 10^-(digits+2)
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, q.digits + 2);
    const Rational target = make_rational(Integer(1), scale);

    const Rational w_n = kernel_term(q.n);
    unsigned long k0 = std::max<unsigned long>(q.n, 32);
    const unsigned long k0_cap = 1u << 15;

    while (true) {
        // exact partial sum over k = n .. k0-1 and the term at k0
        Rational partial(0);
        Rational w = w_n;
        for (unsigned long k = q.n; k < k0; ++k) {
            partial += w;
            w *= kernel_ratio(k);
        }
        const Rational w_k0 = w;

        const Rational tail_sum_bound = w_k0 * make_rational(static_cast<long>(k0 - 1));
        for (unsigned J = 8; J <= 48; J += 4) {
            const auto& cert = certificate(J);
            const Rational k0q = make_rational(static_cast<long>(k0));
            Rational bound = cert.abs_coeff_sum * tail_sum_bound /
                             (Rational(2) * pow_rational(k0q, cert.eta_decay));
            bound /= w_n;  // error on the normalized series
            if (bound <= target) {
                const Rational tail = poly_eval(cert.p, k0q) / pow_rational(k0q, cert.order) * w_k0;
                Hyp3F2Result r;
                r.value = (partial + tail) / w_n;
                r.error_bound = bound;
                r.direct_terms = static_cast<unsigned>(k0 - q.n);
                r.certificate_order = J;
                return r;
            }
        }
        if (k0 >= k0_cap)
            throw ConvergenceError("hyp3f2: could not certify requested accuracy within caps");
        k0 *= 2;
    }
}

Real hyp3f2(const Hyp3F2Query& q) {
    const Hyp3F2Result r = hyp3f2_exact(q);
    return Real::of_rational(r.value, std::min(q.digits + 4, Real::max_digits()));
}

std::vector<Rational> hyp3f2_partial_sums(unsigned n, unsigned count) {
    if (n < 2) throw std::invalid_argument("hyp3f2_partial_sums: n must be >= 2");
    std::vector<Rational> sums;
    sums.reserve(count);
    Rational term(1);  // t_0 = 1
    Rational acc(0);
    for (unsigned m = 0; m < count; ++m) {
        acc += term;
        sums.push_back(acc);
        term *= kernel_ratio(n + m);
    }
    return sums;
}

Real hyp3f2_identity_residual(unsigned n, unsigned digits) {
    if (n < 2) throw std::invalid_argument("hyp3f2_identity_residual: n must be >= 2");
    const unsigned wd = std::min(digits + 10, Real::max_digits());
    const long N = static_cast<long>(n);

    const Real lhs = Real::of_rational(finite_sum_S(n), wd);

    const Rational pairs = make_rational(N * (N - 1), 2);
    Real rhs = Real::of_rational(pairs * make_rational(7, 4), wd) -
               Real::of_rational(pairs, wd) * Real::ln2(wd);
    const Rational prefactor = gamma_half_ratio(n) / Rational(factorial(n + 1));
    const Hyp3F2Result f = hyp3f2_exact({n, std::min(digits + 6, Real::max_digits() - 4)});
    rhs -= Real::of_rational(prefactor * f.value, wd);

    return lhs - rhs;
}

Real energy_boxed_numeric(unsigned n, unsigned digits) {
    if (n < 2) throw std::invalid_argument("energy_boxed_numeric: n must be >= 2");
    const unsigned wd = std::min(digits + 8, Real::max_digits());
    const Rational N = make_rational(static_cast<long>(n));

    ConstExpr head = digamma_int(n) * (N * N / 2);
    head += ConstExpr::rational(-(N * N) / 4 + N * make_rational(3, 4) + make_rational(1, 4));
    head += ConstExpr::of(Rational(0), N / 2, Rational(0));

    const Rational prefactor = gamma_half_ratio(n) / Rational(factorial(n + 1));
    const Hyp3F2Result f = hyp3f2_exact({n, std::min(digits + 6, Real::max_digits() - 4)});
    return head.eval(wd) - Real::of_rational(prefactor * f.value, wd);
}

EnergyReport energy_report(unsigned n, unsigned digits) {
    EnergyReport r;
    r.n = n;
    r.exact = energy_exact(n);
    r.rescaled_exact = energy_rescaled(n);
    r.numeric = r.exact.eval(digits);
    r.rescaled_numeric = r.rescaled_exact.eval(digits);
    return r;
}

}  // namespace dyson2d
