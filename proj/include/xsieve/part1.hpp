// Iteration engine for the expanded sieve bound tables.
//
// The engine maintains weighted upper/lower tables wF, wf over a weight grid
// and improves them by repeatedly applying a family of update operators, each
// a valid bound on the underlying sifted sums. Upper updates enter through a
// pointwise min against the previous table, lower updates through a pointwise
// max, so the tables improve monotonically. A full run consists of a first
// alpha=2 phase, bootstrap phases at the configured alpha values that hand
// their improved zero-weight row back, and a closing alpha=2 phase.
#pragma once

#include <vector>

#include "xsieve/classical.hpp"
#include "xsieve/config.hpp"
#include "xsieve/table.hpp"

namespace xsieve {

// Frozen double-sieve inputs (see part2.hpp for the driver).
struct DsParams {
    double c4 = 0.0;  // the weighted transfer constant: e^-gamma * 4 F(0,2)
};

struct Part1Result {
    BoundTable phase1;  // after the first alpha=2 phase only
    BoundTable final;   // after the bootstrap and the closing phase
    std::vector<double> sweep_deltas;  // max table change of each sweep
};

class SieveEngine {
public:
    SieveEngine(const ClassicalFunctions& cls, ScheduleConfig cfg);

    const ScheduleConfig& config() const { return cfg_; }

    // Table seeded from the classical functions for the given alpha.
    BoundTable initial_table(double alpha) const;

    // Re-derive the top rows and interior rows from the current zero-weight
    // row (clamped), so later phases start from the best known state.
    void reseed_rows(BoundTable& t) const;

    // One schedule phase: `sweeps` descending level sweeps with
    // cycles_per_level snapshots per level. If ds is set, the double-sieve
    // operators join the lower-bound update set.
    // Returns the max table change of each sweep.
    std::vector<double> run_phase(BoundTable& t, int sweeps, const DsParams* ds = nullptr) const;

    // Seed a table at alpha_new from a converged alpha=2 table.
    BoundTable bootstrap_transfer(const BoundTable& base2, double alpha_new) const;

    // Clamp the master's zero-weight row with a donor's (min for wF, max for wf).
    static void absorb_zero_row(BoundTable& master, const BoundTable& donor);

    Part1Result run_part1() const;

    double u0_of_level(const KGrid& grid, int level) const;

    // lower-bound candidates (write max-candidates into c, one slot per u sample)
    void cand_lower_descent(const BoundTable& s, int l, std::vector<double>& c) const;      // delay kernel from anchor v
    void cand_lower_half_weight(const BoundTable& s, int l, std::vector<double>& c) const;  // half-budget variant
    void cand_lower_convex(const BoundTable& s, int l, std::vector<double>& c) const;
    void cand_lower_weight_shift(const BoundTable& s, int l, std::vector<double>& c) const;
    void cand_lower_high_weight(const BoundTable& s, int l, std::vector<double>& c) const;  // rows above n+1

    // upper-bound candidates (write min-candidates)
    void cand_upper_descent(const BoundTable& s, int l, std::vector<double>& c) const;
    void cand_upper_weight_shift(const BoundTable& s, int l, std::vector<double>& c) const;
    void cand_upper_convex(const BoundTable& s, int l, std::vector<double>& c) const;

    double fine_step() const { return cfg_.u_step / cfg_.fine_factor; }
    int first_index_above(const BoundTable& t, double u, bool strict) const;

private:
    friend struct DsOps;
    struct ProfiledPass;  // precomputed state-independent kernels of the profiled descent
    void update_f_row(BoundTable& t, const BoundTable& snap, int level, const DsParams* ds) const;
    void update_F_row(BoundTable& t, const BoundTable& snap, int level,
                      const std::vector<ProfiledPass>& passes) const;
    void flat_refresh(BoundTable& t, int level) const;
    std::vector<ProfiledPass> build_profiled_passes(const KGrid& grid) const;
    void cand_upper_profiled(const BoundTable& s, int l, const std::vector<ProfiledPass>& passes,
                             std::vector<double>& c) const;  // k(a,t) forms

    // per-u correction integral caches
    std::vector<double> jweights(double alpha) const;                      // int_0^{1/u} t^(a-1)/(1-t)
    std::vector<double> zero_row_shift_corr(const BoundTable& s) const;    // f-weighted shift correction

    const ClassicalFunctions& cls_;
    ScheduleConfig cfg_;
};

}  // namespace xsieve
