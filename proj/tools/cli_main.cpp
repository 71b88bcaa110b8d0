// Command-line front end for the dyson2d toolkit. Talks to the shared
// library exclusively through its C API (dyson2d.h); all exact values cross
// as decimal-free strings and are re-assembled here for human, json or csv
// output.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyson2d.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitConvergence = 3;

int exit_code_for(dy2_status s) {
    switch (s) {
        case DY2_OK: return kExitOk;
        case DY2_ECHECK: return kExitCheckFailure;
        case DY2_ECONVERGE: return kExitConvergence;
        default: return kExitUsage;
    }
}

// Owning wrapper for strings handed out by the C API.
struct ApiString {
    char* p = nullptr;
    ~ApiString() { dy2_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ApiExpr {
    dy2_expr* e = nullptr;
    ~ApiExpr() { dy2_expr_free(e); }
};

[[noreturn]] void fail(dy2_status s) {
    std::cerr << "error (" << dy2_status_name(s) << "): " << dy2_last_error() << "\n";
    std::exit(exit_code_for(s));
}

void check(dy2_status s) {
    if (s != DY2_OK) fail(s);
}

std::string expr_coeff(const dy2_expr* e, dy2_coeff which) {
    ApiString s;
    check(dy2_expr_coeff(e, which, &s.p));
    return s.str();
}

json expr_to_json(const dy2_expr* e, uint32_t digits) {
    uint32_t n_ref = 0;
    check(dy2_expr_n_ref(e, &n_ref));
    ApiString decimal;
    check(dy2_expr_eval(e, digits, &decimal.p));
    json j;
    j["rational"] = expr_coeff(e, DY2_COEFF_ONE);
    j["gamma"] = expr_coeff(e, DY2_COEFF_GAMMA);
    j["ln2"] = expr_coeff(e, DY2_COEFF_LN2);
    j["lnN"] = expr_coeff(e, DY2_COEFF_LNN);
    j["n_ref"] = n_ref;
    j["decimal"] = decimal.str();
    j["digits"] = digits;
    return j;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot write " << output_path << "\n";
        std::exit(kExitUsage);
    }
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitUsage);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// half-integer parameter like "-2", "0.5", "-1.5" -> power in half units
int parse_halves(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        std::cerr << "error: cannot parse power '" << text << "'\n";
        std::exit(kExitUsage);
    }
    const double halves = 2.0 * v;
    const long rounded = std::lround(halves);
    if (std::abs(halves - static_cast<double>(rounded)) > 1e-9) {
        std::cerr << "error: power must be an integer or half-integer, got '" << text << "'\n";
        std::exit(kExitUsage);
    }
    return static_cast<int>(rounded);
}

// ---- subcommand implementations ----

int cmd_e_table(uint32_t n_max, uint32_t eps_max, bool single, uint32_t n, uint32_t eps,
                const std::string& format, const std::string& output) {
    if (single) {
        ApiString v;
        check(dy2_e_formula(n, eps, &v.p));
        if (format == "json") {
            json j{{"n", n}, {"eps", eps}, {"value", v.str()}};
            emit(j.dump(2) + "\n", output);
        } else {
            emit(v.str() + "\n", output);
        }
        return kExitOk;
    }

    dy2_etable* t = nullptr;
    check(dy2_e_table(n_max, eps_max, &t));
    std::unique_ptr<dy2_etable, decltype(&dy2_etable_free)> guard(t, dy2_etable_free);

    std::ostringstream out;
    if (format == "csv") {
        out << "N";
        for (uint32_t e = 1; e <= eps_max; ++e) out << ",eps=" << e;
        out << "\n";
        for (uint32_t row_n = 2; row_n <= n_max; ++row_n) {
            out << row_n;
            for (uint32_t e = 1; e <= eps_max; ++e) {
                ApiString cell;
                check(dy2_etable_cell(t, row_n, e, &cell.p));
                out << "," << cell.str();
            }
            out << "\n";
        }
    } else if (format == "json") {
        json j;
        j["n_max"] = n_max;
        j["eps_max"] = eps_max;
        j["rows"] = json::array();
        for (uint32_t row_n = 2; row_n <= n_max; ++row_n) {
            json row{{"n", row_n}, {"values", json::array()}};
            for (uint32_t e = 1; e <= eps_max; ++e) {
                ApiString cell;
                check(dy2_etable_cell(t, row_n, e, &cell.p));
                row["values"].push_back(cell.str());
            }
            j["rows"].push_back(std::move(row));
        }
        emit(j.dump(2) + "\n", output);
        return kExitOk;
    } else {
        out << "e_N(eps) for N = 2.." << n_max << ", eps = 1.." << eps_max << "\n";
        for (uint32_t row_n = 2; row_n <= n_max; ++row_n) {
            out << "N=" << row_n << ":";
            for (uint32_t e = 1; e <= eps_max; ++e) {
                ApiString cell;
                check(dy2_etable_cell(t, row_n, e, &cell.p));
                out << " " << cell.str();
            }
            out << "\n";
        }
    }
    emit(out.str(), output);
    return kExitOk;
}

json energy_row_json(uint32_t n, uint32_t digits, bool rescaled) {
    ApiExpr e;
    check(rescaled ? dy2_energy_rescaled(n, &e.e) : dy2_energy_exact(n, &e.e));
    json j = expr_to_json(e.e, digits);
    j["n"] = n;
    j["rescaled"] = rescaled;
    return j;
}

std::string energy_row_human(uint32_t n, uint32_t digits, bool rescaled) {
    ApiExpr e;
    check(rescaled ? dy2_energy_rescaled(n, &e.e) : dy2_energy_exact(n, &e.e));
    ApiString sym, dec;
    check(dy2_expr_str(e.e, &sym.p));
    check(dy2_expr_eval(e.e, digits, &dec.p));
    std::ostringstream out;
    out << (rescaled ? "E~_" : "E_") << n << "(1) = " << sym.str() << "\n"
        << "  = " << dec.str() << "\n";
    return out.str();
}

int cmd_energy(uint32_t n, uint32_t digits, bool rescaled, const std::string& format,
               const std::string& output) {
    if (format == "csv") {
        std::cerr << "error: exact energies carry symbolic constants; csv is not available "
                     "(use json or human)\n";
        return kExitUsage;
    }
    if (format == "json")
        emit(energy_row_json(n, digits, rescaled).dump(2) + "\n", output);
    else
        emit(energy_row_human(n, digits, rescaled), output);
    return kExitOk;
}

int cmd_energy_table(uint32_t n_max, uint32_t digits, bool rescaled, const std::string& format,
                     const std::string& output) {
    if (format == "csv") {
        std::cerr << "error: exact energies carry symbolic constants; csv is not available "
                     "(use json or human)\n";
        return kExitUsage;
    }
    if (format == "json") {
        json j = json::array();
        for (uint32_t n = 2; n <= n_max; ++n) j.push_back(energy_row_json(n, digits, rescaled));
        emit(j.dump(2) + "\n", output);
    } else {
        std::ostringstream out;
        for (uint32_t n = 2; n <= n_max; ++n) out << energy_row_human(n, digits, rescaled);
        emit(out.str(), output);
    }
    return kExitOk;
}

int cmd_verify_recursions(uint32_t n_max, uint32_t eps_max, uint32_t energy_n_max,
                          const std::string& output) {
    ApiString report;
    const dy2_status s = dy2_verify_recursions(n_max, eps_max, energy_n_max, &report.p);
    if (s != DY2_OK && s != DY2_ECHECK) fail(s);
    emit(report.str(), output);
    return exit_code_for(s);
}

int cmd_hyp3f2_check(uint32_t n, uint32_t n_max, uint32_t digits, const std::string& format,
                     const std::string& output) {
    const uint32_t lo = (n != 0) ? n : 2;
    const uint32_t hi = (n != 0) ? n : n_max;
    const double tol = std::pow(10.0, -static_cast<double>(digits) + 2.0);
    std::ostringstream out;
    json rows = json::array();
    bool ok = true;
    for (uint32_t i = lo; i <= hi; ++i) {
        ApiString res;
        check(dy2_hyp3f2_identity_residual(i, digits, &res.p));
        const double r = std::strtod(res.p, nullptr);
        const bool row_ok = std::abs(r) < tol;
        ok = ok && row_ok;
        if (format == "json")
            rows.push_back({{"n", i}, {"residual", res.str()}, {"ok", row_ok}});
        else
            out << "n=" << i << " residual=" << res.str() << (row_ok ? "" : "  EXCEEDS TOLERANCE")
                << "\n";
    }
    if (format == "json") {
        json j{{"digits", digits}, {"tolerance", tol}, {"rows", rows}, {"ok", ok}};
        emit(j.dump(2) + "\n", output);
    } else {
        out << (ok ? "identity holds at working precision\n" : "identity check FAILED\n");
        emit(out.str(), output);
    }
    return ok ? kExitOk : kExitCheckFailure;
}

// one evaluation row: n, truncated expansion, exact energy, absolute error
json asymptotics_row(uint32_t n, int halves, uint32_t digits) {
    ApiString asym;
    check(dy2_energy_asymptotic(n, halves, digits, &asym.p));
    ApiExpr exact;
    check(dy2_energy_exact(n, &exact.e));
    ApiString exact_dec;
    check(dy2_expr_eval(exact.e, digits, &exact_dec.p));
    const double diff = std::abs(std::strtod(asym.p, nullptr) - std::strtod(exact_dec.p, nullptr));
    return json{{"n", n}, {"asymptotic", asym.str()}, {"exact", exact_dec.str()}, {"abs_error", diff}};
}

int cmd_asymptotics_sweep(uint32_t n_max, int halves, uint32_t digits, const std::string& format,
                          const std::string& output) {
    std::ostringstream out;
    json rows = json::array();
    if (format == "csv") out << "n,asymptotic,exact,abs_error\n";
    for (uint32_t n = 2; n <= n_max; ++n) {
        const json row = asymptotics_row(n, halves, digits);
        if (format == "csv") {
            out << n << "," << row.at("asymptotic").get<std::string>() << ","
                << row.at("exact").get<std::string>() << "," << row.at("abs_error").get<double>()
                << "\n";
        } else if (format == "json") {
            rows.push_back(row);
        } else {
            out << "N=" << n << ": asymptotic " << row.at("asymptotic").get<std::string>()
                << ", exact " << row.at("exact").get<std::string>() << ", abs error "
                << row.at("abs_error").get<double>() << "\n";
        }
    }
    if (format == "json")
        emit(json{{"truncate_power", halves / 2.0}, {"rows", rows}}.dump(2) + "\n", output);
    else
        emit(out.str(), output);
    return kExitOk;
}

int cmd_asymptotics(bool have_n, uint32_t n, uint32_t digits, const std::string& power,
                    const std::string& format, const std::string& output) {
    if (!have_n) {
        const uint32_t count = dy2_asymptotic_term_count();
        std::ostringstream out;
        json rows = json::array();
        if (format == "csv") out << "power,is_log,coeff_one,coeff_gamma,coeff_inv_sqrt_pi\n";
        for (uint32_t i = 0; i < count; ++i) {
            int32_t halves = 0, is_log = 0;
            ApiString c1, cg, cs;
            check(dy2_asymptotic_term(i, &halves, &is_log, &c1.p, &cg.p, &cs.p));
            const double p = halves / 2.0;
            if (format == "csv") {
                out << p << "," << is_log << "," << c1.str() << "," << cg.str() << "," << cs.str()
                    << "\n";
            } else if (format == "json") {
                rows.push_back({{"power", p},
                                {"is_log", is_log != 0},
                                {"coeff_one", c1.str()},
                                {"coeff_gamma", cg.str()},
                                {"coeff_inv_sqrt_pi", cs.str()}});
            } else {
                out << "N^" << p << (is_log ? " ln N" : "") << ": " << c1.str();
                if (cg.str() != "0") out << " + (" << cg.str() << ") gamma";
                if (cs.str() != "0") out << " + (" << cs.str() << ")/sqrt(pi)";
                out << "\n";
            }
        }
        if (format == "json")
            emit(json{{"terms", rows}}.dump(2) + "\n", output);
        else
            emit(out.str(), output);
        return kExitOk;
    }

    const int halves = parse_halves(power);
    ApiString asym;
    check(dy2_energy_asymptotic(n, halves, digits, &asym.p));
    ApiExpr exact;
    check(dy2_energy_exact(n, &exact.e));
    ApiString exact_dec;
    check(dy2_expr_eval(exact.e, digits, &exact_dec.p));
    const double diff = std::abs(std::strtod(asym.p, nullptr) - std::strtod(exact_dec.p, nullptr));

    if (format == "json") {
        json j{{"n", n},
               {"truncate_power", halves / 2.0},
               {"digits", digits},
               {"asymptotic", asym.str()},
               {"exact", exact_dec.str()},
               {"abs_error", diff}};
        emit(j.dump(2) + "\n", output);
    } else if (format == "csv") {
        std::ostringstream out;
        out << "n,asymptotic,exact,abs_error\n"
            << n << "," << asym.str() << "," << exact_dec.str() << "," << diff << "\n";
        emit(out.str(), output);
    } else {
        std::ostringstream out;
        out << "asymptotic E_" << n << "(1) (terms down to N^" << halves / 2.0
            << ") = " << asym.str() << "\n"
            << "exact = " << exact_dec.str() << "\n"
            << "abs error = " << diff << "\n";
        emit(out.str(), output);
    }
    return kExitOk;
}

int cmd_mc_estimate(uint32_t n, uint64_t sweeps, uint32_t chains, uint64_t burn_in, uint64_t seed,
                    const std::string& format, const std::string& output) {
    dy2_mc_params p{n, sweeps, chains, burn_in, seed};
    dy2_mc_estimate est{};
    check(dy2_mc_estimate_energy(&p, &est));

    std::ostringstream out;
    if (format == "json") {
        json j{{"n", n},
               {"mean", est.mean},
               {"std_error", est.std_error},
               {"sweeps_per_chain", est.sweeps},
               {"chains", est.chains},
               {"burn_in", est.burn_in},
               {"acceptance_rate", est.acceptance_rate},
               {"seed", est.seed},
               {"mixing_failure", est.mixing_failure != 0}};
        out << j.dump(2) << "\n";
    } else {
        char buf[256];
        std::snprintf(buf, sizeof buf, "E~_%u(1) = %.10f +/- %.10f\n", n, est.mean, est.std_error);
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "sweeps/chain=%llu chains=%u burn-in=%llu acceptance=%.3f seed=%llu\n",
                      static_cast<unsigned long long>(est.sweeps), est.chains,
                      static_cast<unsigned long long>(est.burn_in), est.acceptance_rate,
                      static_cast<unsigned long long>(est.seed));
        out << buf;
        if (est.mixing_failure) out << "WARNING: chains disagree beyond 6 sigma\n";
    }
    emit(out.str(), output);
    return est.mixing_failure ? kExitCheckFailure : kExitOk;
}

int cmd_paper_tables(const std::string& golden_path, const std::string& dump_path,
                     const std::string& format, const std::string& output) {
    if (!dump_path.empty()) {
        ApiString j;
        check(dy2_golden_dump(&j.p));
        emit(j.str() + "\n", dump_path);
        return kExitOk;
    }
    std::string golden_text;
    if (!golden_path.empty()) golden_text = read_file(golden_path);
    ApiString report;
    const dy2_status s =
        dy2_paper_tables_check(golden_path.empty() ? nullptr : golden_text.c_str(), &report.p);
    if (s != DY2_OK && s != DY2_ECHECK) fail(s);
    if (format == "json") {
        json j{{"ok", s == DY2_OK}, {"report", report.str()}};
        emit(j.dump(2) + "\n", output);
    } else {
        emit(report.str(), output);
    }
    return exit_code_for(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dyson2d: exact and Monte-Carlo mean-energy toolkit for the beta=1 planar gas"};
    app.require_subcommand(1);

    std::string format = "human";
    std::string output;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--output", output, "write output to this file instead of stdout");
    };

    uint32_t n = 0, n_max = 0, eps = 0, eps_max = 0, digits = 20, chains = 4;
    uint32_t verify_n_max = 25, verify_eps_max = 6, energy_n_max = 40;
    uint32_t hyp_n_max = 50, hyp_digits = 25;
    uint64_t sweeps = 100000, burn_in = 0, seed = 1;
    bool rescaled = false;
    std::string power = "-2";
    std::string golden_path, dump_path;

    auto* etab = app.add_subcommand("e-table", "exact correlator table e_N(eps)");
    etab->add_option("--n-max", n_max, "largest N");
    etab->add_option("--eps-max", eps_max, "largest eps");
    etab->add_option("--n", n, "single value: N");
    etab->add_option("--eps", eps, "single value: eps");

    auto* energy = app.add_subcommand("energy", "exact mean energy at one N");
    energy->add_option("--n", n, "particle count")->required();
    energy->add_option("--digits", digits, "decimal digits of the rendering");
    energy->add_flag("--rescaled", rescaled, "subtract N(N-1)/2 ln N");

    auto* etable2 = app.add_subcommand("energy-table", "exact mean energies for N = 2..n-max");
    etable2->add_option("--n-max", n_max, "largest N")->required();
    etable2->add_option("--digits", digits, "decimal digits of the rendering");
    etable2->add_flag("--rescaled", rescaled, "subtract N(N-1)/2 ln N");

    auto* verify = app.add_subcommand("verify-recursions", "residual sweep of both recursions");
    verify->add_option("--n-max", verify_n_max, "largest base N for the correlator recursion")
        ->capture_default_str();
    verify->add_option("--eps-max", verify_eps_max, "largest eps for the correlator recursion")
        ->capture_default_str();
    verify->add_option("--energy-n-max", energy_n_max, "largest N for the energy recursion")
        ->capture_default_str();

    auto* hcheck = app.add_subcommand("hyp3f2-check", "hypergeometric identity residuals");
    hcheck->add_option("--n", n, "single N");
    hcheck->add_option("--n-max", hyp_n_max, "sweep N = 2..n-max")->capture_default_str();
    hcheck->add_option("--digits", hyp_digits, "working digits")->capture_default_str();

    auto* asym = app.add_subcommand("asymptotics", "large-N expansion terms / evaluation");
    asym->add_option("--n", n, "evaluate at this N (omit to list the terms)");
    asym->add_option("--n-max", n_max, "sweep N = 2..n-max instead of a single N");
    asym->add_option("--digits", digits, "decimal digits of the rendering");
    asym->add_option("--truncate-power", power, "keep terms with power >= this (e.g. -2, 0.5)");

    auto* mc = app.add_subcommand("mc-estimate", "Metropolis estimate of the rescaled energy");
    mc->add_option("--n", n, "particle count")->required();
    mc->add_option("--sweeps", sweeps, "measurement sweeps per chain")->capture_default_str();
    mc->add_option("--chains", chains, "independent chains")->capture_default_str();
    mc->add_option("--burn-in", burn_in, "burn-in sweeps per chain (0 = sweeps/10)");
    mc->add_option("--seed", seed, "rng seed")->capture_default_str();

    auto* tables = app.add_subcommand("paper-tables", "regenerate and diff the golden tables");
    tables->add_option("--golden", golden_path, "JSON file replacing the embedded golden copies");
    tables->add_option("--dump-golden", dump_path, "write the embedded golden copies to a file");

    for (auto* sub : {etab, energy, etable2, verify, hcheck, asym, mc, tables}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (etab->parsed()) {
        const bool single = etab->count("--n") > 0;
        if (single && etab->count("--eps") == 0) {
            std::cerr << "error: --n requires --eps\n";
            return kExitUsage;
        }
        if (!single && (etab->count("--n-max") == 0 || etab->count("--eps-max") == 0)) {
            std::cerr << "error: need --n-max and --eps-max (or --n with --eps)\n";
            return kExitUsage;
        }
        return cmd_e_table(n_max, eps_max, single, n, eps, format, output);
    }
    if (energy->parsed()) return cmd_energy(n, digits, rescaled, format, output);
    if (etable2->parsed()) return cmd_energy_table(n_max, digits, rescaled, format, output);
    if (verify->parsed())
        return cmd_verify_recursions(verify_n_max, verify_eps_max, energy_n_max, output);
    if (hcheck->parsed())
        return cmd_hyp3f2_check(hcheck->count("--n") ? n : 0, hyp_n_max, hyp_digits, format,
                                output);
    if (asym->parsed()) {
        if (asym->count("--n-max") > 0)
            return cmd_asymptotics_sweep(n_max, parse_halves(power), digits, format, output);
        return cmd_asymptotics(asym->count("--n") > 0, n, digits, power, format, output);
    }
    if (mc->parsed()) return cmd_mc_estimate(n, sweeps, chains, burn_in, seed, format, output);
    if (tables->parsed()) return cmd_paper_tables(golden_path, dump_path, format, output);
    return kExitUsage;
}
