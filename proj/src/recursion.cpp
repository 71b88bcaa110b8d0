#include "dyson2d/recursion.hpp"

#include "dyson2d/closed_form.hpp"

namespace dyson2d {

namespace {

// eps-polynomial coefficients (degree 2) of the four signed window weights.
// Row i multiplies e_{n+i}; column j is the eps^j coefficient.
std::array<std::array<Rational, 3>, 4> e_recursion_poly(unsigned n) {
    const long N = static_cast<long>(n);
    std::array<std::array<Rational, 3>, 4> p;
    p[0] = {make_rational((N + 1) * (2 * N + 3) * (2 * N + 4)),
            make_rational((N + 1) * (4 * N + 7)), make_rational(N + 1)};
    p[1] = {make_rational(-2 * (6 * N * N * N + 26 * N * N + 34 * N + 12)),
            make_rational(-2 * (4 * N * N + 10 * N + 5)), make_rational(-2 * (N + 1))};
    p[2] = {make_rational((N + 1) * (12 * N * N + 38 * N + 24)),
            make_rational((N + 1) * (4 * N + 5)), make_rational(N + 1)};
    p[3] = {make_rational(-4 * (N + 2) * (N + 1) * (N + 1)), Rational(0), Rational(0)};
    return p;
}

}  // namespace

std::array<Rational, 4> e_recursion_coeffs(unsigned n, unsigned eps) {
    if (n < 2) throw std::invalid_argument("e_recursion_coeffs: n must be >= 2");
    const auto poly = e_recursion_poly(n);
    const Rational e = make_rational(static_cast<long>(eps));
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = poly[i][0] + poly[i][1] * e + poly[i][2] * e * e;
    return c;
}

Rational e_recursion_residual_with(const std::array<Rational, 4>& coeffs,
                                   const RecursionWindow<Rational>& w) {
    Rational r(0);
    for (int i = 0; i < 4; ++i) r += coeffs[i] * w.values[i];
    return r;
}

Rational e_recursion_residual(const RecursionWindow<Rational>& w, unsigned eps) {
    return e_recursion_residual_with(e_recursion_coeffs(w.n, eps), w);
}

EnergyRecursionCoeffs energy_recursion_coeffs(unsigned n) {
    if (n < 2) throw std::invalid_argument("energy_recursion_coeffs: n must be >= 2");
    const long N = static_cast<long>(n);
    EnergyRecursionCoeffs c;
    c.window[0] = make_rational(2 * (2 * N + 3) * (N + 2) * (N + 1));
    c.window[1] = make_rational(-4 * (N + 2) * (3 * N * N + 7 * N + 3));
    c.window[2] = make_rational(2 * (N + 1) * (6 * N * N + 19 * N + 12));
    c.window[3] = make_rational(-4 * (N + 2) * (N + 1) * (N + 1));
    c.inhomogeneous = make_rational((3 * N + 5) * (N + 1));
    return c;
}

ConstExpr energy_recursion_residual_with(const EnergyRecursionCoeffs& coeffs,
                                         const RecursionWindow<ConstExpr>& w) {
    for (const auto& v : w.values)
        if (v.has_ln_n())
            throw std::invalid_argument(
                "energy_recursion_residual: window must not carry a ln N component");
    ConstExpr r = ConstExpr::rational(coeffs.inhomogeneous);
    for (int i = 0; i < 4; ++i) r += w.values[i] * coeffs.window[i];
    return r;
}

ConstExpr energy_recursion_residual(const RecursionWindow<ConstExpr>& w) {
    return energy_recursion_residual_with(energy_recursion_coeffs(w.n), w);
}

std::vector<ConstExpr> solve_energy_forward(unsigned n_max) {
    if (n_max < 4) throw std::invalid_argument("solve_energy_forward: n_max must be >= 4");
    std::vector<ConstExpr> e;
    e.reserve(n_max - 1);
    e.push_back(ConstExpr::of(make_rational(1), make_rational(-1), make_rational(1)));
    e.push_back(ConstExpr::of(make_rational(29, 8), make_rational(-3), make_rational(3)));
    e.push_back(ConstExpr::of(make_rational(793, 96), make_rational(-6), make_rational(6)));
    for (unsigned n = 2; n + 3 <= n_max; ++n) {
        const auto c = energy_recursion_coeffs(n);
        ConstExpr rhs = ConstExpr::rational(c.inhomogeneous);
        for (int i = 0; i < 3; ++i) rhs += e[n - 2 + i] * c.window[i];
        // divide by -c3 = 4(n+2)(n+1)^2, always nonzero
        e.push_back(rhs * (make_rational(-1) / c.window[3]));
    }
    return e;
}

ConstExpr generic_solution(unsigned n, const ConstExpr& c1, const ConstExpr& c2,
                           const ConstExpr& c3) {
    if (n < 2) throw std::invalid_argument("generic_solution: n must be >= 2");
    const Rational N = make_rational(static_cast<long>(n));
    ConstExpr r = digamma_int(n) * (N * N / 2);
    r += ConstExpr::rational(1, 4);
    r += c1 * N;
    r += c2 * (N * N);
    r += c3 * finite_sum_S(n);
    return r;
}

std::pair<ConstExpr, ConstExpr> eps_expansion_coefficients(
    unsigned n, const std::array<ConstExpr, 4>& energies) {
    if (n < 2) throw std::invalid_argument("eps_expansion_coefficients: n must be >= 2");
    const auto poly = e_recursion_poly(n);
    ConstExpr order0, order1;
    for (int i = 0; i < 4; ++i) {
        const long m = static_cast<long>(n) + i;
        const Rational pairs = make_rational(m * (m - 1), 2);
        // (p0 + p1 eps + p2 eps^2) * (pairs + eps E)
        order0 += ConstExpr::rational(poly[i][0] * pairs);
        order1 += ConstExpr::rational(poly[i][1] * pairs) + energies[i] * poly[i][0];
    }
    return {order0, order1};
}

}  // namespace dyson2d
