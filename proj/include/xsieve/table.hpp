// Discrete weight grid and the sampled two-parameter bound tables.
//
// A BoundTable stores the weighted values the engine iterates on:
//   wF(k,u) = e^-gamma (u + k/(alpha u^(alpha-1))) F_alpha(k,u)
//   wf(k,u) = e^-gamma (u + k/(alpha u^(alpha-1))) f_alpha(k,u)
// sampled on a uniform u grid, one row per weight level. Upper rows exist for
// levels 0..n, lower rows for levels 0..n+5. Tables are immutable snapshots
// between operator applications; successors are built against a frozen copy.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace xsieve {

struct KGrid {
    double alpha = 2.0;
    int n = 16;
    std::vector<double> levels;  // k_0 .. k_{n+5}

    static KGrid build(double alpha, int n);
    double k_top() const { return levels[static_cast<size_t>(n)]; }  // k_n
};

struct BetaSplit {
    double k_lo = 0.0;
    double k_hi = 0.0;
    double beta = 1.0;  // beta*k_hi + (1-beta)*k_lo = target
};

// Neighbor split of k_target among levels 0..max_level of the grid.
BetaSplit beta_split(const KGrid& grid, double k_target, int max_level);
// Spec surface: split among the upper-bound levels 0..n.
BetaSplit beta_split(const KGrid& grid, double k_target);

struct BoundTable {
    KGrid grid;
    double u_min = 0.21;
    double u_step = 0.01;
    int u_count = 0;
    int iteration_index = 0;
    std::vector<std::vector<double>> wF;   // [level 0..n][u]
    std::vector<std::vector<double>> wf;   // [level 0..n+5][u]
    std::vector<double> flat_u;            // flat anchor u0 per upper row

    static BoundTable zeros(const KGrid& grid, double u_min, double u_step, double u_max);

    int levels_F() const { return grid.n + 1; }
    int levels_f() const { return grid.n + 6; }
    double u_at(int i) const { return u_min + i * u_step; }
    int index_of(double u) const;          // nearest sample index, clamped
    double weight(double k, double u) const;

    // Row reads with directed interpolation: upper values round up by the
    // local second-difference bound, lower values round down (floored at 0).
    double wF_at(int level, double u) const;
    double wf_at(int level, double u) const;
    double wF_raw(int level, double u) const;
    double wf_raw(int level, double u) const;

    // Beta-interpolated reads at arbitrary weight k.
    double wF_breve(double k, double u) const;  // levels 0..n
    double wf_breve(double k, double u) const;  // levels 0..n+1

    // Full-grid CSV: header "u,k,wF,wf", decreasing u then decreasing k,
    // six decimals. Upper cells are blank for levels above n.
    std::string emit_csv() const;

    nlohmann::json to_json() const;
    static BoundTable from_json(const nlohmann::json& j);

    void check_ordering(const char* where) const;  // aborts if wf > wF anywhere
};

// Parse the emit_csv format back into (u,k,wF,wf) tuples for round-trip tests.
struct CsvCell {
    double u, k;
    double wF;  // NaN when blank
    double wf;
};
std::vector<CsvCell> parse_csv(const std::string& text);

}  // namespace xsieve
