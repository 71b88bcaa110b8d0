#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "dyson2d.h"

namespace {

std::string take(char* p) {
    REQUIRE(p != nullptr);
    std::string s(p);
    dy2_string_free(p);
    return s;
}

}  // namespace

TEST_CASE("exact kernel surface") {
    char* out = nullptr;
    REQUIRE(dy2_factorial(20, &out) == DY2_OK);
    CHECK(take(out) == "2432902008176640000");

    REQUIRE(dy2_harmonic(10, &out) == DY2_OK);
    CHECK(take(out) == "7381/2520");
    CHECK(dy2_harmonic(0, &out) == DY2_EINVAL);
    CHECK(std::strlen(dy2_last_error()) > 0);

    REQUIRE(dy2_gamma_half_ratio(3, &out) == DY2_OK);
    CHECK(take(out) == "105/8");

    CHECK(dy2_factorial(5, nullptr) == DY2_EINVAL);
}

TEST_CASE("const-expression handles") {
    dy2_expr* e = nullptr;
    REQUIRE(dy2_digamma_int(5, &e) == DY2_OK);
    char* out = nullptr;
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_ONE, &out) == DY2_OK);
    CHECK(take(out) == "25/12");
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_GAMMA, &out) == DY2_OK);
    CHECK(take(out) == "-1");
    uint32_t n_ref = 99;
    REQUIRE(dy2_expr_n_ref(e, &n_ref) == DY2_OK);
    CHECK(n_ref == 0);
    int32_t is_zero = 1;
    REQUIRE(dy2_expr_is_zero(e, &is_zero) == DY2_OK);
    CHECK(is_zero == 0);
    dy2_expr_free(e);

    CHECK(dy2_digamma_int(0, &e) == DY2_EINVAL);
}

TEST_CASE("rescaled energy expression round trip") {
    dy2_expr* e = nullptr;
    REQUIRE(dy2_energy_rescaled(5, &e) == DY2_OK);
    char* out = nullptr;
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_ONE, &out) == DY2_OK);
    CHECK(take(out) == "5831/384");
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_GAMMA, &out) == DY2_OK);
    CHECK(take(out) == "-10");
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_LN2, &out) == DY2_OK);
    CHECK(take(out) == "10");
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_LNN, &out) == DY2_OK);
    CHECK(take(out) == "-10");
    uint32_t n_ref = 0;
    REQUIRE(dy2_expr_n_ref(e, &n_ref) == DY2_OK);
    CHECK(n_ref == 5);
    REQUIRE(dy2_expr_eval(e, 19, &out) == DY2_OK);
    CHECK(take(out).substr(0, 20) == "0.249831865576454075");
    REQUIRE(dy2_expr_str(e, &out) == DY2_OK);
    CHECK(take(out) == "5831/384 - 10*gamma + 10*ln2 - 10*ln(5)");
    CHECK(dy2_expr_eval(e, 5000, &out) == DY2_EINVAL);
    dy2_expr_free(e);
}

TEST_CASE("correlator surface") {
    char* out = nullptr;
    REQUIRE(dy2_partition_beta1(4, &out) == DY2_OK);
    CHECK(take(out) == "288");
    REQUIRE(dy2_e_formula(7, 5, &out) == DY2_OK);
    CHECK(take(out) == "28268520");
    REQUIRE(dy2_e_oracle(5, 3, &out) == DY2_OK);
    CHECK(take(out) == "10890");
    CHECK(dy2_e_oracle(7, 1, &out) == DY2_ELIMIT);
    CHECK(dy2_e_formula(1, 1, &out) == DY2_EINVAL);

    dy2_etable* t = nullptr;
    REQUIRE(dy2_e_table(7, 5, &t) == DY2_OK);
    CHECK(dy2_etable_rows(t) == 6);
    CHECK(dy2_etable_cols(t) == 5);
    REQUIRE(dy2_etable_cell(t, 4, 3, &out) == DY2_OK);
    CHECK(take(out) == "4056");
    CHECK(dy2_etable_cell(t, 8, 1, &out) == DY2_EINVAL);
    CHECK(dy2_etable_cell(t, 4, 6, &out) == DY2_EINVAL);
    dy2_etable_free(t);
}

TEST_CASE("recursion surface") {
    char* report = nullptr;
    REQUIRE(dy2_verify_recursions(10, 3, 20, &report) == DY2_OK);
    const std::string text = take(report);
    CHECK(text.find("0 nonzero residual") != std::string::npos);

    dy2_expr* e = nullptr;
    REQUIRE(dy2_energy_forward(5, &e) == DY2_OK);
    char* out = nullptr;
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_ONE, &out) == DY2_OK);
    CHECK(take(out) == "5831/384");
    dy2_expr_free(e);

    dy2_expr* e2 = nullptr;
    REQUIRE(dy2_energy_forward(2, &e2) == DY2_OK);
    REQUIRE(dy2_expr_coeff(e2, DY2_COEFF_LN2, &out) == DY2_OK);
    CHECK(take(out) == "1");
    dy2_expr_free(e2);
}

TEST_CASE("closed-form surface") {
    char* out = nullptr;
    REQUIRE(dy2_finite_sum(3, &out) == DY2_OK);
    CHECK(take(out) == "15/8");

    REQUIRE(dy2_hyp3f2(2, 25, &out) == DY2_OK);
    const std::string f = take(out);
    CHECK(f.substr(0, 12) == "1.6909645111");

    REQUIRE(dy2_hyp3f2_identity_residual(5, 25, &out) == DY2_OK);
    const double r = std::strtod(take(out).c_str(), nullptr);
    CHECK(std::abs(r) < 1e-23);

    dy2_expr* e = nullptr;
    REQUIRE(dy2_energy_exact(2, &e) == DY2_OK);
    REQUIRE(dy2_expr_coeff(e, DY2_COEFF_ONE, &out) == DY2_OK);
    CHECK(take(out) == "1");
    dy2_expr_free(e);

    CHECK(dy2_hyp3f2(1, 20, &out) == DY2_EINVAL);
}

TEST_CASE("asymptotics surface") {
    REQUIRE(dy2_asymptotic_term_count() == 8);
    int32_t halves = 0, is_log = 0;
    char *c1 = nullptr, *cg = nullptr, *cs = nullptr;
    REQUIRE(dy2_asymptotic_term(0, &halves, &is_log, &c1, &cg, &cs) == DY2_OK);
    CHECK(halves == 4);
    CHECK(is_log == 1);
    CHECK(take(c1) == "1/2");
    CHECK(take(cg) == "0");
    CHECK(take(cs) == "0");
    REQUIRE(dy2_asymptotic_term(3, &halves, &is_log, &c1, &cg, &cs) == DY2_OK);
    CHECK(halves == 1);
    CHECK(take(cs) == "-4/3");
    dy2_string_free(c1);
    dy2_string_free(cg);
    CHECK(dy2_asymptotic_term(8, &halves, &is_log, &c1, &cg, &cs) == DY2_EINVAL);

    char* out = nullptr;
    REQUIRE(dy2_energy_asymptotic(50, -4, 20, &out) == DY2_OK);
    CHECK(take(out).substr(0, 7) == "4299.35");
    CHECK(dy2_energy_asymptotic(50, 3, 20, &out) == DY2_EINVAL);

    dy2_expr* tc = nullptr;
    REQUIRE(dy2_tail_constant(&tc) == DY2_OK);
    REQUIRE(dy2_expr_coeff(tc, DY2_COEFF_ONE, &out) == DY2_OK);
    CHECK(take(out) == "7/8");
    REQUIRE(dy2_expr_coeff(tc, DY2_COEFF_LN2, &out) == DY2_OK);
    CHECK(take(out) == "-1/2");
    dy2_expr_free(tc);
}

TEST_CASE("monte carlo surface") {
    dy2_mc_params p{2, 10000, 2, 0, 77};
    dy2_mc_estimate a{}, b{};
    REQUIRE(dy2_mc_estimate_energy(&p, &a) == DY2_OK);
    REQUIRE(dy2_mc_estimate_energy(&p, &b) == DY2_OK);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.std_error > 0.0);
    CHECK(a.burn_in == 1000);
    CHECK(a.mixing_failure == 0);

    dy2_mc_params bad{1, 10000, 2, 0, 1};
    CHECK(dy2_mc_estimate_energy(&bad, &a) == DY2_EINVAL);
    dy2_mc_params bad2{4, 10, 2, 0, 1};
    CHECK(dy2_mc_estimate_energy(&bad2, &a) == DY2_EINVAL);
    CHECK(dy2_mc_estimate_energy(nullptr, &a) == DY2_EINVAL);
}

TEST_CASE("golden tables surface") {
    char* report = nullptr;
    REQUIRE(dy2_paper_tables_check(nullptr, &report) == DY2_OK);
    CHECK(take(report).find("all cells match") != std::string::npos);

    char* dump = nullptr;
    REQUIRE(dy2_golden_dump(&dump) == DY2_OK);
    std::string golden = take(dump);

    // round trip: feeding the dump back verifies clean
    REQUIRE(dy2_paper_tables_check(golden.c_str(), &report) == DY2_OK);
    dy2_string_free(report);

    // perturb one integer cell: 4056 -> 4057
    const auto pos = golden.find("4056");
    REQUIRE(pos != std::string::npos);
    std::string broken = golden;
    broken.replace(pos, 4, "4057");
    CHECK(dy2_paper_tables_check(broken.c_str(), &report) == DY2_ECHECK);
    const std::string text = take(report);
    CHECK(text.find("4057") != std::string::npos);
    CHECK(text.find("e_table") != std::string::npos);

    CHECK(dy2_paper_tables_check("{not json", &report) == DY2_EINVAL);
}

TEST_CASE("status names") {
    CHECK(std::string(dy2_status_name(DY2_OK)) == "ok");
    CHECK(std::string(dy2_status_name(DY2_ECHECK)) == "check-failure");
    CHECK(std::string(dy2_status_name(DY2_ELIMIT)) == "size-limit");
}
