#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "dyson2d/correlator.hpp"

using namespace dyson2d;

namespace {

// Published table of e_N(eps), N = 2..7, eps = 1..5.
const long kPublished[6][5] = {
    {4, 24, 192, 1920, 23040},        {15, 114, 1152, 14400, 213120},
    {36, 332, 4056, 60720, 1064640},  {70, 760, 10890, 189720, 3838200},
    {120, 1500, 24660, 489744, 11218320}, {189, 2674, 49602, 1105608, 28268520},
};

// Partition-function oracle: expand both Vandermonde factors over
// permutation pairs and apply the Gaussian moment rule; the deltas leave
// sum over sigma of prod_k sigma_k!.
Integer partition_oracle(unsigned n) {
    std::vector<unsigned> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0u);
    Integer z(0);
    do {
        Integer term(1);
        for (unsigned k = 0; k < n; ++k) term *= factorial(sigma[k]);
        z += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return z;
}

}  // namespace

TEST_CASE("partition function") {
    CHECK_THROWS_AS(partition_beta1(0), std::invalid_argument);
    CHECK(partition_beta1(1) == 1);
    CHECK(partition_beta1(2) == 2);
    CHECK(partition_beta1(4) == 288);  // 1! 2! 3! 4!
    for (unsigned n = 2; n <= 5; ++n) CHECK(partition_beta1(n) == partition_oracle(n));
    for (unsigned n = 2; n <= 12; ++n)
        CHECK(partition_beta1(n) == partition_beta1(n - 1) * factorial(n));
}

TEST_CASE("e_formula reproduces the published table") {
    for (unsigned n = 2; n <= 7; ++n)
        for (unsigned eps = 1; eps <= 5; ++eps)
            CHECK(e_formula({n, eps}) == kPublished[n - 2][eps - 1]);
}

TEST_CASE("e_formula at eps = 0 counts pairs") {
    for (unsigned n = 2; n <= 30; ++n)
        CHECK(e_formula({n, 0}) == Integer(static_cast<long>(n) * (n - 1) / 2));
}

TEST_CASE("e_formula rejects n < 2") {
    CHECK_THROWS_AS(e_formula({1, 1}), std::invalid_argument);
}

TEST_CASE("permutation-expansion oracle") {
    CHECK(e_oracle({2, 2}) == 24);
    CHECK(e_oracle({3, 1}) == 15);
    CHECK(e_oracle({5, 3}) == 10890);
    SUBCASE("size guard") {
        CHECK_THROWS_AS(e_oracle({7, 1}), LimitError);
        CHECK_THROWS_AS(e_oracle({3, 5}), LimitError);
    }
}

TEST_CASE("formula agrees with the oracle") {
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned eps = 0; eps <= 3; ++eps)
            CHECK(e_formula({n, eps}) == e_oracle({n, eps}));
    CHECK(e_formula({5, 2}) == e_oracle({5, 2}));
    CHECK(e_formula({6, 1}) == e_oracle({6, 1}));
}

TEST_CASE("e_N(1) is cubic in N: sixth finite differences vanish") {
    std::vector<Integer> v;
    for (unsigned n = 2; n <= 9; ++n) v.push_back(e_formula({n, 1}));
    for (int order = 0; order < 6; ++order) {
        std::vector<Integer> next;
        for (size_t i = 0; i + 1 < v.size(); ++i) next.push_back(v[i + 1] - v[i]);
        v = std::move(next);
    }
    REQUIRE(v.size() == 2);
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
}

TEST_CASE("every term of the pair sum is an exact integer") {
    // rational-route recomputation with the explicit (eps-i+a)!(i+b)!/(a!b!)
    // division; each term must reduce to denominator 1 and the total must
    // equal the integer route.
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned eps = 0; eps <= 4; ++eps) {
            Rational total(0);
            for (unsigned long a = 0; a + 1 < n; ++a) {
                for (unsigned long b = a + 1; b < n; ++b) {
                    const Rational denom{factorial(a) * factorial(b)};
                    for (unsigned long i = 0; i <= eps; ++i) {
                        const Integer c = binomial(eps, i);
                        Rational term =
                            Rational(c * c * factorial(eps - i + a) * factorial(i + b)) / denom;
                        CHECK(term.get_den() == 1);
                        total += term;
                    }
                    if (b - a <= eps) {
                        for (unsigned long i = 0; i + (b - a) <= eps; ++i) {
                            Rational term = Rational(binomial(eps, i) * binomial(eps, i + (b - a)) *
                                                     factorial(eps - i + a) * factorial(i + b)) /
                                            denom;
                            CHECK(term.get_den() == 1);
                            if ((b - a) % 2 == 1) term = -term;
                            total -= term;
                        }
                    }
                }
            }
            CHECK(total.get_den() == 1);
            CHECK(Integer(total.get_num()) == e_formula({n, eps}));
            CHECK(sgn(total) >= 0);
        }
    }
}

TEST_CASE("e_table") {
    const auto t = e_table(7, 5);
    REQUIRE(t.size() == 6);
    for (unsigned n = 2; n <= 7; ++n) {
        REQUIRE(t[n - 2].size() == 5);
        for (unsigned eps = 1; eps <= 5; ++eps) CHECK(t[n - 2][eps - 1] == kPublished[n - 2][eps - 1]);
    }

    const auto single = e_table(2, 1);
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].size() == 1);
    CHECK(single[0][0] == 4);

    const auto empty_eps = e_table(3, 0);
    REQUIRE(empty_eps.size() == 2);
    CHECK(empty_eps[0].empty());
    CHECK(empty_eps[1].empty());

    CHECK_THROWS_AS(e_table(1, 3), std::invalid_argument);
}
