#include "dyson2d.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "dyson2d/asymptotics.hpp"
#include "dyson2d/closed_form.hpp"
#include "dyson2d/const_expr.hpp"
#include "dyson2d/correlator.hpp"
#include "dyson2d/exact.hpp"
#include "dyson2d/golden.hpp"
#include "dyson2d/montecarlo.hpp"
#include "dyson2d/recursion.hpp"

using namespace dyson2d;

struct dy2_expr {
    ConstExpr v;
};

struct dy2_etable {
    std::vector<std::vector<Integer>> rows;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
dy2_status wrap(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const LimitError& e) {
        g_last_error = e.what();
        return DY2_ELIMIT;
    } catch (const ConvergenceError& e) {
        g_last_error = e.what();
        return DY2_ECONVERGE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DY2_EINVAL;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return DY2_EDOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DY2_EINTERNAL;
    }
}

dy2_status require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return DY2_EINVAL;
    }
    return DY2_OK;
}

}  // namespace

extern "C" {

const char* dy2_status_name(dy2_status s) {
    switch (s) {
        case DY2_OK: return "ok";
        case DY2_EINVAL: return "invalid-argument";
        case DY2_ECHECK: return "check-failure";
        case DY2_ECONVERGE: return "convergence-failure";
        case DY2_ELIMIT: return "size-limit";
        case DY2_EDOMAIN: return "domain-error";
        default: return "internal-error";
    }
}

const char* dy2_last_error(void) { return g_last_error.c_str(); }

void dy2_string_free(char* s) { std::free(s); }

/* ---- exact kernel ---- */

dy2_status dy2_factorial(uint32_t n, char** out) {
    if (dy2_status s = require(out && n <= 1000000, "factorial: out null or n > 10^6")) return s;
    return wrap([&] {
        *out = dup_string(to_string(factorial(n)));
        return DY2_OK;
    });
}

dy2_status dy2_harmonic(uint32_t n, char** out) {
    if (dy2_status s = require(out && n >= 1 && n <= 1000000, "harmonic: need 1 <= n <= 10^6"))
        return s;
    return wrap([&] {
        *out = dup_string(to_string(harmonic(n)));
        return DY2_OK;
    });
}

dy2_status dy2_gamma_half_ratio(uint32_t k, char** out) {
    if (dy2_status s = require(out && k <= 1000000, "gamma_half_ratio: out null or k > 10^6"))
        return s;
    return wrap([&] {
        *out = dup_string(to_string(gamma_half_ratio(k)));
        return DY2_OK;
    });
}

void dy2_expr_free(dy2_expr* e) { delete e; }

dy2_status dy2_expr_coeff(const dy2_expr* e, dy2_coeff which, char** out) {
    if (dy2_status s = require(e && out, "expr_coeff: null argument")) return s;
    return wrap([&] {
        const Rational* q = nullptr;
        switch (which) {
            case DY2_COEFF_ONE: q = &e->v.coeff_one(); break;
            case DY2_COEFF_GAMMA: q = &e->v.coeff_gamma(); break;
            case DY2_COEFF_LN2: q = &e->v.coeff_ln2(); break;
            case DY2_COEFF_LNN: q = &e->v.coeff_ln_n(); break;
        }
        if (q == nullptr) throw std::invalid_argument("expr_coeff: unknown coefficient selector");
        *out = dup_string(to_string(*q));
        return DY2_OK;
    });
}

dy2_status dy2_expr_n_ref(const dy2_expr* e, uint32_t* out) {
    if (dy2_status s = require(e && out, "expr_n_ref: null argument")) return s;
    *out = e->v.n_ref();
    return DY2_OK;
}

dy2_status dy2_expr_is_zero(const dy2_expr* e, int32_t* out) {
    if (dy2_status s = require(e && out, "expr_is_zero: null argument")) return s;
    *out = e->v.is_zero() ? 1 : 0;
    return DY2_OK;
}

dy2_status dy2_expr_eval(const dy2_expr* e, uint32_t digits, char** out) {
    if (dy2_status s = require(e && out, "expr_eval: null argument")) return s;
    return wrap([&] {
        *out = dup_string(e->v.eval(digits).str(digits));
        return DY2_OK;
    });
}

dy2_status dy2_expr_str(const dy2_expr* e, char** out) {
    if (dy2_status s = require(e && out, "expr_str: null argument")) return s;
    return wrap([&] {
        *out = dup_string(e->v.str());
        return DY2_OK;
    });
}

dy2_status dy2_digamma_int(uint32_t n, dy2_expr** out) {
    if (dy2_status s = require(out && n >= 1 && n <= 1000000, "digamma_int: need 1 <= n <= 10^6"))
        return s;
    return wrap([&] {
        *out = new dy2_expr{digamma_int(n)};
        return DY2_OK;
    });
}

/* ---- correlator ---- */

dy2_status dy2_partition_beta1(uint32_t n, char** out) {
    if (dy2_status s = require(out && n >= 1 && n <= 2000, "partition_beta1: need 1 <= n <= 2000"))
        return s;
    return wrap([&] {
        *out = dup_string(to_string(partition_beta1(n)));
        return DY2_OK;
    });
}

dy2_status dy2_e_formula(uint32_t n, uint32_t eps, char** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 500 && eps <= 200,
                               "e_formula: need 2 <= n <= 500 and eps <= 200"))
        return s;
    return wrap([&] {
        *out = dup_string(to_string(e_formula({n, eps})));
        return DY2_OK;
    });
}

dy2_status dy2_e_oracle(uint32_t n, uint32_t eps, char** out) {
    if (dy2_status s = require(out && n >= 2, "e_oracle: need n >= 2")) return s;
    return wrap([&] {
        *out = dup_string(to_string(e_oracle({n, eps})));
        return DY2_OK;
    });
}

dy2_status dy2_e_table(uint32_t n_max, uint32_t eps_max, dy2_etable** out) {
    if (dy2_status s = require(out && n_max >= 2 && n_max <= 200 && eps_max <= 64,
                               "e_table: need 2 <= n_max <= 200 and eps_max <= 64"))
        return s;
    return wrap([&] {
        *out = new dy2_etable{e_table(n_max, eps_max)};
        return DY2_OK;
    });
}

void dy2_etable_free(dy2_etable* t) { delete t; }

uint32_t dy2_etable_rows(const dy2_etable* t) {
    return t ? static_cast<uint32_t>(t->rows.size()) : 0;
}

uint32_t dy2_etable_cols(const dy2_etable* t) {
    return (t && !t->rows.empty()) ? static_cast<uint32_t>(t->rows[0].size()) : 0;
}

dy2_status dy2_etable_cell(const dy2_etable* t, uint32_t n, uint32_t eps, char** out) {
    if (dy2_status s = require(t && out, "etable_cell: null argument")) return s;
    if (dy2_status s = require(n >= 2 && n - 2 < t->rows.size() && eps >= 1 &&
                                   eps - 1 < t->rows[n - 2].size(),
                               "etable_cell: index out of range"))
        return s;
    *out = dup_string(to_string(t->rows[n - 2][eps - 1]));
    return DY2_OK;
}

/* ---- recursions ---- */

dy2_status dy2_verify_recursions(uint32_t e_n_max, uint32_t e_eps_max, uint32_t energy_n_max,
                                 char** report) {
    if (dy2_status s = require(report && e_n_max >= 2 && e_n_max <= 100 && e_eps_max <= 32 &&
                                   energy_n_max >= 5 && energy_n_max <= 500,
                               "verify_recursions: parameter out of supported range"))
        return s;
    return wrap([&]() -> dy2_status {
        std::ostringstream rep;
        unsigned long failures = 0;

        unsigned long checked = 0;
        for (unsigned n = 2; n <= e_n_max; ++n) {
            for (unsigned eps = 0; eps <= e_eps_max; ++eps) {
                RecursionWindow<Rational> w;
                w.n = n;
                for (unsigned i = 0; i < 4; ++i)
                    w.values[i] = Rational(e_formula({n + i, eps}));
                ++checked;
                if (sgn(e_recursion_residual(w, eps)) != 0) {
                    ++failures;
                    rep << "nonzero correlator residual at N=" << n << ", eps=" << eps << "\n";
                }
            }
        }
        rep << "correlator recursion: " << checked << " windows checked, " << failures
            << " nonzero residual(s)\n";

        const auto energies = solve_energy_forward(energy_n_max);
        unsigned long e_failures = 0;
        checked = 0;
        for (unsigned n = 2; n + 3 <= energy_n_max; ++n) {
            RecursionWindow<ConstExpr> w;
            w.n = n;
            for (unsigned i = 0; i < 4; ++i) w.values[i] = energies[n - 2 + i];
            ++checked;
            if (!energy_recursion_residual(w).is_zero()) {
                ++e_failures;
                rep << "nonzero energy residual at N=" << n << "\n";
            }
        }
        rep << "energy recursion: " << checked << " windows checked, " << e_failures
            << " nonzero residual(s)\n";

        *report = dup_string(rep.str());
        return (failures + e_failures == 0) ? DY2_OK : DY2_ECHECK;
    });
}

dy2_status dy2_energy_forward(uint32_t n, dy2_expr** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 500, "energy_forward: need 2 <= n <= 500"))
        return s;
    return wrap([&] {
        if (n <= 4) {
            *out = new dy2_expr{solve_energy_forward(4)[n - 2]};
        } else {
            *out = new dy2_expr{solve_energy_forward(n)[n - 2]};
        }
        return DY2_OK;
    });
}

/* ---- closed form ---- */

dy2_status dy2_energy_exact(uint32_t n, dy2_expr** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 2000, "energy_exact: need 2 <= n <= 2000"))
        return s;
    return wrap([&] {
        *out = new dy2_expr{energy_exact(n)};
        return DY2_OK;
    });
}

dy2_status dy2_energy_rescaled(uint32_t n, dy2_expr** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 2000, "energy_rescaled: need 2 <= n <= 2000"))
        return s;
    return wrap([&] {
        *out = new dy2_expr{energy_rescaled(n)};
        return DY2_OK;
    });
}

dy2_status dy2_finite_sum(uint32_t n, char** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 5000, "finite_sum: need 2 <= n <= 5000"))
        return s;
    return wrap([&] {
        *out = dup_string(to_string(finite_sum_S(n)));
        return DY2_OK;
    });
}

dy2_status dy2_hyp3f2(uint32_t n, uint32_t digits, char** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 5000 && digits >= 1,
                               "hyp3f2: need n >= 2 and digits >= 1"))
        return s;
    return wrap([&] {
        *out = dup_string(hyp3f2({n, digits}).str(digits));
        return DY2_OK;
    });
}

dy2_status dy2_hyp3f2_identity_residual(uint32_t n, uint32_t digits, char** out) {
    if (dy2_status s = require(out && n >= 2 && n <= 5000 && digits >= 1,
                               "hyp3f2_identity_residual: need n >= 2 and digits >= 1"))
        return s;
    return wrap([&] {
        *out = dup_string(hyp3f2_identity_residual(n, digits).str(8));
        return DY2_OK;
    });
}

/* ---- asymptotics ---- */

uint32_t dy2_asymptotic_term_count(void) {
    return static_cast<uint32_t>(asymptotic_terms().size());
}

dy2_status dy2_asymptotic_term(uint32_t index, int32_t* power_halves, int32_t* is_log,
                               char** coeff_one, char** coeff_gamma, char** coeff_inv_sqrt_pi) {
    const auto& terms = asymptotic_terms();
    if (dy2_status s = require(power_halves && is_log && coeff_one && coeff_gamma &&
                                   coeff_inv_sqrt_pi && index < terms.size(),
                               "asymptotic_term: null output or index out of range"))
        return s;
    return wrap([&] {
        const auto& t = terms[index];
        *power_halves = t.power_halves;
        *is_log = t.is_log ? 1 : 0;
        *coeff_one = dup_string(to_string(t.coeff_one));
        *coeff_gamma = dup_string(to_string(t.coeff_gamma));
        *coeff_inv_sqrt_pi = dup_string(to_string(t.coeff_inv_sqrt_pi));
        return DY2_OK;
    });
}

dy2_status dy2_energy_asymptotic(uint32_t n, int32_t truncate_after_halves, uint32_t digits,
                                 char** out) {
    if (dy2_status s = require(out && n >= 2 && digits >= 1,
                               "energy_asymptotic: need n >= 2 and digits >= 1"))
        return s;
    return wrap([&] {
        *out = dup_string(energy_asymptotic(n, truncate_after_halves, digits).str(digits));
        return DY2_OK;
    });
}

dy2_status dy2_tail_constant(dy2_expr** out) {
    if (dy2_status s = require(out != nullptr, "tail_constant: null output")) return s;
    return wrap([&] {
        *out = new dy2_expr{tail_constant()};
        return DY2_OK;
    });
}

/* ---- Monte Carlo ---- */

dy2_status dy2_mc_estimate_energy(const dy2_mc_params* params, dy2_mc_estimate* out) {
    if (dy2_status s = require(params && out, "mc_estimate_energy: null argument")) return s;
    if (dy2_status s = require(params->n >= 2 && params->n <= 512 && params->chains >= 1 &&
                                   params->chains <= 256,
                               "mc_estimate_energy: parameter out of supported range"))
        return s;
    return wrap([&] {
        MCParams p;
        p.n = params->n;
        p.sweeps = params->sweeps;
        p.chains = params->chains;
        p.burn_in = params->burn_in;
        p.seed = params->seed;
        const MCEstimate est = estimate_energy(p);
        out->mean = est.mean;
        out->std_error = est.stderr_;
        out->sweeps = est.n_sweeps;
        out->chains = est.n_chains;
        out->burn_in = est.burn_in;
        out->acceptance_rate = est.acceptance_rate;
        out->seed = est.seed;
        out->mixing_failure = est.mixing_failure ? 1 : 0;
        return DY2_OK;
    });
}

/* ---- golden tables ---- */

dy2_status dy2_paper_tables_check(const char* golden_json, char** report) {
    if (dy2_status s = require(report != nullptr, "paper_tables_check: null report")) return s;
    return wrap([&]() -> dy2_status {
        const TableCheckResult res =
            golden_json ? paper_tables_check(golden_from_json(golden_json)) : paper_tables_check();
        *report = dup_string(res.report);
        return res.ok ? DY2_OK : DY2_ECHECK;
    });
}

dy2_status dy2_golden_dump(char** json_out) {
    if (dy2_status s = require(json_out != nullptr, "golden_dump: null output")) return s;
    return wrap([&] {
        *json_out = dup_string(golden_to_json(embedded_golden()));
        return DY2_OK;
    });
}

}  // extern "C"
