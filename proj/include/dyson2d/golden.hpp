#pragma once

// Embedded golden copies of the two published tables (the e_N(eps) integer
// table and the rescaled-energy table with its 20-digit column), plus the
// regeneration/diff check behind the paper-tables command. An alternative
// golden set can be supplied as JSON, which is how fault injection is
// exercised in the test suite.

#include <string>
#include <vector>

#include "dyson2d/exact.hpp"

namespace dyson2d {

struct GoldenEnergyRow {
    unsigned n = 0;
    std::string gamma_coeff;  // rational string
    std::string ln2_coeff;
    std::string ln_n_coeff;
    std::string rational;  // empty when the source omits it
    std::string decimal;   // printed decimal value
};

struct GoldenTables {
    unsigned etable_n_min = 2;
    std::vector<std::vector<Integer>> etable;  // rows N = n_min.., columns eps = 1..
    std::vector<GoldenEnergyRow> energy_rows;
};

const GoldenTables& embedded_golden();

GoldenTables golden_from_json(const std::string& json_text);
std::string golden_to_json(const GoldenTables& g);

struct TableCheckResult {
    bool ok = true;
    std::vector<std::string> mismatches;  // cell-level diffs
    std::string report;                   // full human-readable report
};

// Regenerates both tables and diffs them against the given golden copies.
TableCheckResult paper_tables_check(const GoldenTables& golden);
TableCheckResult paper_tables_check();  // embedded golden

}  // namespace dyson2d
