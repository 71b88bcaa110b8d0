#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyson2d/closed_form.hpp"
#include "dyson2d/correlator.hpp"
#include "dyson2d/recursion.hpp"

using namespace dyson2d;

namespace {

RecursionWindow<Rational> window_from_formula(unsigned n, unsigned eps) {
    RecursionWindow<Rational> w;
    w.n = n;
    for (unsigned i = 0; i < 4; ++i) w.values[i] = Rational(e_formula({n + i, eps}));
    return w;
}

RecursionWindow<ConstExpr> energy_window(const std::vector<ConstExpr>& e, unsigned n) {
    RecursionWindow<ConstExpr> w;
    w.n = n;
    for (unsigned i = 0; i < 4; ++i) w.values[i] = e[n - 2 + i];
    return w;
}

const ConstExpr kE2 = ConstExpr::of(make_rational(1), make_rational(-1), make_rational(1));
const ConstExpr kE3 = ConstExpr::of(make_rational(29, 8), make_rational(-3), make_rational(3));
const ConstExpr kE4 = ConstExpr::of(make_rational(793, 96), make_rational(-6), make_rational(6));

}  // namespace

TEST_CASE("correlator recursion holds on published windows") {
    RecursionWindow<Rational> w{2, {Rational(4), Rational(15), Rational(36), Rational(70)}};
    CHECK(e_recursion_residual(w, 1) == 0);

    RecursionWindow<Rational> w3{2, {Rational(192), Rational(1152), Rational(4056), Rational(10890)}};
    CHECK(e_recursion_residual(w3, 3) == 0);

    RecursionWindow<Rational> bad{2, {Rational(4), Rational(15), Rational(36), Rational(71)}};
    CHECK(sgn(e_recursion_residual(bad, 1)) != 0);
}

TEST_CASE("correlator recursion residual vanishes on a sweep") {
    for (unsigned n = 2; n <= 20; ++n)
        for (unsigned eps = 0; eps <= 5; ++eps)
            CHECK(e_recursion_residual(window_from_formula(n, eps), eps) == 0);
}

TEST_CASE("perturbing any correlator recursion coefficient breaks a valid window") {
    const auto w = window_from_formula(3, 2);
    auto coeffs = e_recursion_coeffs(3, 2);
    REQUIRE(e_recursion_residual_with(coeffs, w) == 0);
    for (int i = 0; i < 4; ++i) {
        auto perturbed = coeffs;
        perturbed[i] += 1;
        CHECK(sgn(e_recursion_residual_with(perturbed, w)) != 0);
    }
}

TEST_CASE("energy recursion: inhomogeneous term survives a zero window") {
    RecursionWindow<ConstExpr> w{2, {ConstExpr(), ConstExpr(), ConstExpr(), ConstExpr()}};
    const ConstExpr r = energy_recursion_residual(w);
    CHECK(r.coeff_one() == make_rational(33));  // (3*2+5)(2+1)
    CHECK(r.coeff_gamma() == 0);
    CHECK(r.coeff_ln2() == 0);
}

TEST_CASE("energy recursion rejects windows carrying a ln N component") {
    RecursionWindow<ConstExpr> w{2, {energy_rescaled(2), ConstExpr(), ConstExpr(), ConstExpr()}};
    CHECK_THROWS_AS(energy_recursion_residual(w), std::invalid_argument);
}

TEST_CASE("forward solve: initial conditions and known rows") {
    CHECK_THROWS_AS(solve_energy_forward(3), std::invalid_argument);

    const auto e4 = solve_energy_forward(4);
    REQUIRE(e4.size() == 3);
    CHECK(e4[0] == kE2);
    CHECK(e4[1] == kE3);
    CHECK(e4[2] == kE4);

    const auto e10 = solve_energy_forward(10);
    CHECK(e10[5 - 2].coeff_one() == make_rational(5831, 384));
    CHECK(e10[5 - 2].coeff_gamma() == make_rational(-10));
    CHECK(e10[5 - 2].coeff_ln2() == make_rational(10));
    CHECK(e10[10 - 2].coeff_gamma() == make_rational(-45));
    CHECK(e10[10 - 2].coeff_ln2() == make_rational(45));
}

TEST_CASE("forward-solved windows satisfy the recursion") {
    const auto e = solve_energy_forward(43);
    for (unsigned n = 2; n <= 40; ++n)
        CHECK(energy_recursion_residual(energy_window(e, n)).is_zero());
}

TEST_CASE("perturbing any energy recursion coefficient breaks a valid window") {
    const auto e = solve_energy_forward(8);
    const auto w = energy_window(e, 2);
    auto coeffs = energy_recursion_coeffs(2);
    REQUIRE(energy_recursion_residual_with(coeffs, w).is_zero());
    for (int i = 0; i < 4; ++i) {
        auto perturbed = coeffs;
        perturbed.window[i] += 1;
        CHECK(!energy_recursion_residual_with(perturbed, w).is_zero());
    }
    auto perturbed = coeffs;
    perturbed.inhomogeneous += 1;
    CHECK(!energy_recursion_residual_with(perturbed, w).is_zero());
}

TEST_CASE("generic solution") {
    const auto c = fitted_constants();

    CHECK(generic_solution(2, c[0], c[1], c[2]) == kE2);
    CHECK(generic_solution(3, c[0], c[1], c[2]) == kE3);
    CHECK(generic_solution(4, c[0], c[1], c[2]) == kE4);

    // all-zero constants leave n^2/2 digamma(n) + 1/4
    const ConstExpr plain = generic_solution(2, ConstExpr(), ConstExpr(), ConstExpr());
    CHECK(plain == ConstExpr::of(make_rational(9, 4), make_rational(-2), Rational(0)));

    const auto e = solve_energy_forward(12);
    for (unsigned n = 2; n <= 12; ++n) CHECK(generic_solution(n, c[0], c[1], c[2]) == e[n - 2]);
}

TEST_CASE("generic solution is linear in its parameters") {
    const auto c = fitted_constants();
    const Rational delta = make_rational(7, 3);
    for (unsigned n : {2u, 3u, 7u, 15u}) {
        const ConstExpr base = generic_solution(n, c[0], c[1], c[2]);
        const ConstExpr shifted =
            generic_solution(n, c[0] + ConstExpr::rational(delta), c[1], c[2]);
        CHECK(shifted - base == ConstExpr::rational(delta * make_rational(static_cast<long>(n))));
    }
}

TEST_CASE("eps expansion of the correlator recursion reproduces the energy recursion") {
    const auto e = solve_energy_forward(25);
    for (unsigned n = 2; n <= 20; ++n) {
        std::array<ConstExpr, 4> window;
        for (unsigned i = 0; i < 4; ++i) window[i] = e[n - 2 + i];
        const auto [order0, order1] = eps_expansion_coefficients(n, window);
        CHECK(order0.is_zero());
        CHECK(order1.is_zero());
    }

    // a wrong energy window must show up at order eps^1
    std::array<ConstExpr, 4> bad{e[0] + ConstExpr::rational(1), e[1], e[2], e[3]};
    const auto [o0, o1] = eps_expansion_coefficients(2, bad);
    CHECK(o0.is_zero());
    CHECK(!o1.is_zero());
}
