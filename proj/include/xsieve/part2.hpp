// Double-sieve extension: lower-bound operators that cap the upper kernel by
// a frozen majorant constant, enabling the zero-weight lower row to extend
// further left than the plain iteration allows. Runs at alpha=2 only, seeded
// with the converged Part I table.
#pragma once

#include <cmath>
#include <vector>

#include "xsieve/part1.hpp"

namespace xsieve {

struct DoubleSieveContext {
    BoundTable part1_table;  // frozen hand-off state
    double f2_0_2 = 0.0;     // e^-gamma * 2 F(0,2) read from the hand-off table
    DsParams params;         // c4 = 2 * f2_0_2 (or the classical 4.0)

    static DoubleSieveContext make(const BoundTable& part1_final, const ScheduleConfig& cfg);
};

struct DsResult {
    BoundTable table;
    std::vector<double> sweep_deltas;
};

DsResult run_double_sieve(const SieveEngine& eng, const DoubleSieveContext& ctx);

struct PipelineResult {
    Part1Result part1;
    DoubleSieveContext ds_ctx;
    BoundTable ds_table;
};

PipelineResult run_pipeline(const SieveEngine& eng);

// Double-sieve lower-bound candidates; called by the engine's row updater.
struct DsOps {
    static void cand_capped_descent(const SieveEngine& e, const BoundTable& s, int l,
                                    double c4, std::vector<double>& c);
    static void cand_high_weight_capped(const SieveEngine& e, const BoundTable& s, int l,
                                        double c4, std::vector<double>& c);
    static void cand_zero_row_capped(const SieveEngine& e, const BoundTable& s,
                                     double c4, std::vector<double>& c);
    static void cand_zero_row_shift_capped(const SieveEngine& e, const BoundTable& s,
                                           double c4, std::vector<double>& c);
    // Branch split of the high-weight capped kernel (exposed for tests).
    static double branch_split(double v) { return v / std::sqrt(2.0); }
    // Overflow term of the capped kernel; zero when kt <= kn.
    static double overflow_term(double kt, double kn, double t, double c4);
};

}  // namespace xsieve
