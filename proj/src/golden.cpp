#include "dyson2d/golden.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "dyson2d/closed_form.hpp"
#include "dyson2d/correlator.hpp"

namespace dyson2d {

namespace {

GoldenTables build_embedded() {
    GoldenTables g;
    g.etable_n_min = 2;
    const long rows[6][5] = {
        {4, 24, 192, 1920, 23040},
        {15, 114, 1152, 14400, 213120},
        {36, 332, 4056, 60720, 1064640},
        {70, 760, 10890, 189720, 3838200},
        {120, 1500, 24660, 489744, 11218320},
        {189, 2674, 49602, 1105608, 28268520},
    };
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (long v : row) r.emplace_back(v);
        g.etable.push_back(std::move(r));
    }
    g.energy_rows = {
        {5, "-10", "10", "-10", "5831/384", "0.249831865576454075"},
        {10, "-45", "45", "-45", "", "-7.766078379434240251"},
        {25, "-300", "300", "-300", "", "-99.84816319738693935"},
        {50, "-1225", "1225", "-1225", "", "-492.8773199345421588"},
        {75, "-2775", "2775", "-2775", "", "-1191.5028305194359964"},
    };
    return g;
}

// All printed digits must agree once the computed value is rounded to the
// printed decimal count, with the last digit allowed to be off by one unit:
// scale both by 10^decimals and compare as integers with |diff| <= 1.
bool matches_printed_decimal(const Real& computed, const std::string& printed) {
    const auto dot = printed.find('.');
    const size_t decimals = (dot == std::string::npos) ? 0 : printed.size() - dot - 1;

    std::string digits = printed;
    if (dot != std::string::npos) digits.erase(dot, 1);
    const Integer printed_scaled(digits, 10);

    mpfr_t scaled;
    mpfr_init2(scaled, 512);
    mpfr_set(scaled, computed.raw(), MPFR_RNDN);
    for (size_t i = 0; i < decimals; ++i) mpfr_mul_ui(scaled, scaled, 10, MPFR_RNDN);
    mpfr_round(scaled, scaled);
    Integer computed_scaled;
    mpfr_get_z(computed_scaled.get_mpz_t(), scaled, MPFR_RNDN);
    mpfr_clear(scaled);

    Integer diff = computed_scaled - printed_scaled;
    return abs(diff) <= 1;
}

}  // namespace

const GoldenTables& embedded_golden() {
    static const GoldenTables g = build_embedded();
    return g;
}

GoldenTables golden_from_json(const std::string& json_text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(json_text);
        GoldenTables g;
        const auto& et = j.at("figure_etable");
        g.etable_n_min = et.at("n_min").get<unsigned>();
        for (const auto& row : et.at("rows")) {
            std::vector<Integer> r;
            for (const auto& cell : row) {
                if (cell.is_string())
                    r.emplace_back(Integer(cell.get<std::string>(), 10));
                else
                    r.emplace_back(static_cast<long>(cell.get<long long>()));
            }
            g.etable.push_back(std::move(r));
        }
        for (const auto& row : j.at("energy_rows")) {
            GoldenEnergyRow r;
            r.n = row.at("n").get<unsigned>();
            r.gamma_coeff = row.at("gamma").get<std::string>();
            r.ln2_coeff = row.at("ln2").get<std::string>();
            r.ln_n_coeff = row.at("lnN").get<std::string>();
            if (row.contains("rational") && !row.at("rational").is_null())
                r.rational = row.at("rational").get<std::string>();
            r.decimal = row.at("decimal").get<std::string>();
            g.energy_rows.push_back(std::move(r));
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("golden JSON malformed: ") + e.what());
    }
}

std::string golden_to_json(const GoldenTables& g) {
    nlohmann::json j;
    j["figure_etable"]["n_min"] = g.etable_n_min;
    auto& rows = j["figure_etable"]["rows"];
    rows = nlohmann::json::array();
    for (const auto& row : g.etable) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) r.push_back(to_string(cell));
        rows.push_back(std::move(r));
    }
    j["energy_rows"] = nlohmann::json::array();
    for (const auto& row : g.energy_rows) {
        nlohmann::json r;
        r["n"] = row.n;
        r["gamma"] = row.gamma_coeff;
        r["ln2"] = row.ln2_coeff;
        r["lnN"] = row.ln_n_coeff;
        if (!row.rational.empty()) r["rational"] = row.rational;
        r["decimal"] = row.decimal;
        j["energy_rows"].push_back(std::move(r));
    }
    return j.dump(2);
}

TableCheckResult paper_tables_check(const GoldenTables& golden) {
    TableCheckResult res;
    std::ostringstream report;

    const unsigned n_min = golden.etable_n_min;
    const unsigned n_max = n_min + static_cast<unsigned>(golden.etable.size()) - 1;
    unsigned eps_max = 0;
    for (const auto& row : golden.etable)
        eps_max = std::max(eps_max, static_cast<unsigned>(row.size()));

    report << "correlator table e_N(eps), N = " << n_min << ".." << n_max << ", eps = 1.."
           << eps_max << "\n";
    for (unsigned n = n_min; n <= n_max; ++n) {
        const auto& gold_row = golden.etable[n - n_min];
        for (unsigned eps = 1; eps <= gold_row.size(); ++eps) {
            const Integer computed = e_formula({n, eps});
            if (computed != gold_row[eps - 1]) {
                std::ostringstream m;
                m << "e_table[N=" << n << "][eps=" << eps << "]: computed " << to_string(computed)
                  << ", golden " << to_string(gold_row[eps - 1]);
                res.mismatches.push_back(m.str());
            }
        }
    }

    report << "rescaled energy table, " << golden.energy_rows.size() << " rows\n";
    for (const auto& row : golden.energy_rows) {
        const ConstExpr e = energy_rescaled(row.n);
        auto check_coeff = [&](const char* name, const Rational& got, const std::string& want) {
            if (want.empty()) return;
            if (got != rational_from_string(want)) {
                std::ostringstream m;
                m << "energy[N=" << row.n << "]." << name << ": computed " << to_string(got)
                  << ", golden " << want;
                res.mismatches.push_back(m.str());
            }
        };
        check_coeff("gamma", e.coeff_gamma(), row.gamma_coeff);
        check_coeff("ln2", e.coeff_ln2(), row.ln2_coeff);
        check_coeff("lnN", e.coeff_ln_n(), row.ln_n_coeff);
        check_coeff("rational", e.coeff_one(), row.rational);
        const Real numeric = e.eval(30);
        if (!matches_printed_decimal(numeric, row.decimal)) {
            std::ostringstream m;
            m << "energy[N=" << row.n << "].decimal: computed " << numeric.str(20) << ", golden "
              << row.decimal;
            res.mismatches.push_back(m.str());
        }
    }

    res.ok = res.mismatches.empty();
    if (res.ok) {
        report << "all cells match\n";
    } else {
        report << res.mismatches.size() << " mismatching cell(s):\n";
        for (const auto& m : res.mismatches) report << "  " << m << "\n";
    }
    res.report = report.str();
    return res;
}

TableCheckResult paper_tables_check() { return paper_tables_check(embedded_golden()); }

}  // namespace dyson2d
