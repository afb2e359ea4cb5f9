// Run configuration for the table iteration and its double-sieve extension.
// The built-in defaults reproduce the published schedule; everything the
// schedule leaves open (operator v-lists, the a-grid, update interleaving)
// is exposed here and validated on load.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace xsieve {

struct ScheduleConfig {
    // u sampling (uniform step on (0.2, u_max])
    double u_min = 0.21;
    double u_step = 0.01;
    double u_max = 10.0;
    int n_levels = 16;

    // cycle structure: per-level cycles, full descending sweeps
    int cycles_per_level = 4;
    int sweeps_first = 8;        // initial alpha=2 phase
    int sweeps_boot = 4;         // each bootstrap phase
    int sweeps_final = 8;        // closing alpha=2 phase
    std::vector<double> alpha_sequence{2.0, 3.5, 4.0, 2.0};

    // operator v-lists
    std::vector<double> v_f1{10.0};
    std::vector<double> v_f2{3.0, 3.5, 4.0, 4.5, 5.0};
    std::vector<double> v_F1{10.0};
    std::vector<double> v_F3{3.0, 2.75, 2.5, 2.25};
    double a_min = 1.0;          // a-grid for the profiled upper descent
    double a_step = 0.5;

    // double-sieve phase
    int ds_sweeps = 6;
    std::vector<double> ds_v_f25{2.25, 2.5, 2.75, 3.0, 3.5, 4.0, 4.5, 5.0, 10.0};
    std::vector<double> ds_v_f27{3.0, 3.5, 4.0, 4.5, 5.0};
    bool ds_fine_v = true;       // add a fine v sweep for the zero-weight row
    double ds_fine_span = 1.0;
    double ds_fine_step = 0.02;
    bool f27_outer_weight = false;  // multiply the capped log term by u
    std::string c4_mode = "part1";  // "part1" | "jr"

    int threads = 1;
    int fine_factor = 4;         // integrand substeps per u step

    double convergence_eps = 1e-4;

    double u_top() const { return u_max; }
    void validate() const;

    static ScheduleConfig from_json(const nlohmann::json& j);  // rejects unknown keys
    nlohmann::json to_json() const;
};

}  // namespace xsieve
