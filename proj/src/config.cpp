#include "xsieve/config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace xsieve {

void ScheduleConfig::validate() const {
    if (u_step <= 0 || u_min <= 0.2 - 1e-12 || u_max <= u_min)
        throw std::invalid_argument("config: bad u grid");
    if (n_levels < 2) throw std::invalid_argument("config: n_levels must be >= 2");
    if (cycles_per_level < 1 || sweeps_first < 0 || sweeps_boot < 0 ||
        sweeps_final < 0 || ds_sweeps < 0)
        throw std::invalid_argument("config: cycle counts must be >= 1 (sweeps >= 0)");
    if (alpha_sequence.empty() || alpha_sequence.front() != 2.0 ||
        alpha_sequence.back() != 2.0)
        throw std::invalid_argument("config: alpha sequence must start and end at 2");
    for (double a : alpha_sequence)
        if (a < 2.0) throw std::invalid_argument("config: alpha < 2 unsupported");
    if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (c4_mode != "part1" && c4_mode != "jr")
        throw std::invalid_argument("config: c4_mode must be part1 or jr");
    for (double v : v_f2)
        if (v <= 1.0) throw std::invalid_argument("config: v values must exceed 1");
}

namespace {
const std::set<std::string> kKnownKeys = {
    "u_min", "u_step", "u_max", "n_levels", "cycles_per_level", "sweeps_first",
    "sweeps_boot", "sweeps_final", "alpha_sequence", "v_f1", "v_f2", "v_F1",
    "v_F3", "a_min", "a_step", "ds_sweeps", "ds_v_f25", "ds_v_f27", "ds_fine_v",
    "ds_fine_span", "ds_fine_step", "f27_outer_weight", "c4_mode", "threads",
    "fine_factor", "convergence_eps"};
}

ScheduleConfig ScheduleConfig::from_json(const nlohmann::json& j) {
    ScheduleConfig c;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!kKnownKeys.count(it.key()))
            throw std::invalid_argument("config: unknown key '" + it.key() + "'");
    auto num = [&](const char* k, double& dst) { if (j.contains(k)) dst = j.at(k).get<double>(); };
    auto inum = [&](const char* k, int& dst) { if (j.contains(k)) dst = j.at(k).get<int>(); };
    auto vec = [&](const char* k, std::vector<double>& dst) {
        if (j.contains(k)) dst = j.at(k).get<std::vector<double>>();
    };
    num("u_min", c.u_min);
    num("u_step", c.u_step);
    num("u_max", c.u_max);
    inum("n_levels", c.n_levels);
    inum("cycles_per_level", c.cycles_per_level);
    inum("sweeps_first", c.sweeps_first);
    inum("sweeps_boot", c.sweeps_boot);
    inum("sweeps_final", c.sweeps_final);
    vec("alpha_sequence", c.alpha_sequence);
    vec("v_f1", c.v_f1);
    vec("v_f2", c.v_f2);
    vec("v_F1", c.v_F1);
    vec("v_F3", c.v_F3);
    num("a_min", c.a_min);
    num("a_step", c.a_step);
    inum("ds_sweeps", c.ds_sweeps);
    vec("ds_v_f25", c.ds_v_f25);
    vec("ds_v_f27", c.ds_v_f27);
    if (j.contains("ds_fine_v")) c.ds_fine_v = j.at("ds_fine_v").get<bool>();
    num("ds_fine_span", c.ds_fine_span);
    num("ds_fine_step", c.ds_fine_step);
    if (j.contains("f27_outer_weight")) c.f27_outer_weight = j.at("f27_outer_weight").get<bool>();
    if (j.contains("c4_mode")) c.c4_mode = j.at("c4_mode").get<std::string>();
    inum("threads", c.threads);
    inum("fine_factor", c.fine_factor);
    num("convergence_eps", c.convergence_eps);
    c.validate();
    return c;
}

nlohmann::json ScheduleConfig::to_json() const {
    nlohmann::json j;
    j["u_min"] = u_min;
    j["u_step"] = u_step;
    j["u_max"] = u_max;
    j["n_levels"] = n_levels;
    j["cycles_per_level"] = cycles_per_level;
    j["sweeps_first"] = sweeps_first;
    j["sweeps_boot"] = sweeps_boot;
    j["sweeps_final"] = sweeps_final;
    j["alpha_sequence"] = alpha_sequence;
    j["v_f1"] = v_f1;
    j["v_f2"] = v_f2;
    j["v_F1"] = v_F1;
    j["v_F3"] = v_F3;
    j["a_min"] = a_min;
    j["a_step"] = a_step;
    j["ds_sweeps"] = ds_sweeps;
    j["ds_v_f25"] = ds_v_f25;
    j["ds_v_f27"] = ds_v_f27;
    j["ds_fine_v"] = ds_fine_v;
    j["ds_fine_span"] = ds_fine_span;
    j["ds_fine_step"] = ds_fine_step;
    j["f27_outer_weight"] = f27_outer_weight;
    j["c4_mode"] = c4_mode;
    j["threads"] = threads;
    j["fine_factor"] = fine_factor;
    j["convergence_eps"] = convergence_eps;
    return j;
}

}  // namespace xsieve
