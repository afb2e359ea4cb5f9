// Published table values shipped as data for the deviation reports, plus the
// comparison machinery. Comparisons are reported, never gating: the published
// schedule leaves details open, so per-cell deviations are listed instead of
// asserted.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xsieve/table.hpp"

namespace xsieve {

struct PaperCell {
    double u;
    double k;      // weight level; 0 for the zero-row tables
    char kind;     // 'F' or 'f'
    double value;
};

// Weighted tables over u in {3, 2.5, 2, 1.5, 1}, all weight levels.
const std::vector<PaperCell>& paper_table1();  // first alpha=2 phase
const std::vector<PaperCell>& paper_table2();  // after the bootstrap
const std::vector<PaperCell>& paper_table4();  // double sieve
// Zero-weight row tables on a 0.1 grid.
const std::vector<PaperCell>& paper_table3();
const std::vector<PaperCell>& paper_table5();

struct Deviation {
    double u, k;
    char kind;
    double paper, computed, delta;
};

struct DeviationReport {
    std::string name;
    double tolerance = 5e-3;
    int total = 0;
    int within = 0;
    std::vector<Deviation> deviations;

    double fraction_within() const { return total ? double(within) / total : 1.0; }
    nlohmann::json to_json() const;
};

// The emitted upper value: stored row value, scaled by k/u^alpha below the
// row's weight threshold (how the published low-u cells are produced).
double emitted_wF(const BoundTable& t, int level, double u);

DeviationReport compare_to_paper(const BoundTable& t, const std::vector<PaperCell>& cells,
                                 const std::string& name, double tol = 5e-3);

// CSV slice of the zero-weight row on [lo, hi] at `step`, matching the
// published zero-row table layout.
std::string emit_zero_row_csv(const BoundTable& t, double lo, double hi, double step);

}  // namespace xsieve
