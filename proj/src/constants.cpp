#include "xsieve/constants.hpp"

#include <cmath>
#include <cstring>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "xsieve/numerics.hpp"

namespace xsieve {

double goldbach_upper_constant(const BoundTable& ds) {
    double w1 = ds.wF_raw(0, 1.0);
    double w2 = ds.wF_raw(0, 2.0);
    if (std::fabs(w1 - w2) >= 1e-6)
        throw std::logic_error("upper row not flat between u=1 and u=2");
    return 4.0 * w1;
}

double chen_integral() {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    return integrate(
        [](double t) { return t * std::log(2.0 - 3.0 * t) / (1.0 - t); }, 0.0,
        1.0 / 3.0, cfg);
}

double d12_lower_constant(const BoundTable& ds, double transfer_cell) {
    int level = -1;
    for (int l = 0; l <= ds.grid.n; ++l)
        if (std::fabs(ds.grid.levels[l] - 2.25) < 1e-9) level = l;
    if (level < 0) throw std::invalid_argument("d12: grid has no k=2.25 row");
    double a = ds.wf_raw(level, 1.5);
    double omega = 2.25 * 4.0 * transfer_cell * chen_integral();
    return 4.0 * (a - omega);
}

double lower_support_edge(const BoundTable& ds, double lo, double hi) {
    auto g = [&](double u) { return ds.wf_raw(0, u); };
    if (g(lo) > 0.0 || g(hi) <= 0.0)
        throw std::runtime_error("lower bound vanishes on range");
    // largest u with wf(0,u) == 0 under linear interpolation
    double a = lo, b = hi;
    for (int it = 0; it < 100 && (b - a) > 1e-10; ++it) {
        double mid = 0.5 * (a + b);
        if (g(mid) <= 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

double exception_exponent(const BoundTable& ds) {
    return lower_support_edge(ds) - 1.0;
}

ConstantsReport make_constants_report(const BoundTable& ds, double transfer_cell) {
    ConstantsReport r;
    r.cell_wF01 = ds.wF_raw(0, 1.0);
    r.goldbach_upper = goldbach_upper_constant(ds);
    r.chen_integral = chen_integral();
    int level = -1;
    for (int l = 0; l <= ds.grid.n; ++l)
        if (std::fabs(ds.grid.levels[l] - 2.25) < 1e-9) level = l;
    r.cell_wf_225_15 = level >= 0 ? ds.wf_raw(level, 1.5) : 0.0;
    r.transfer_cell = transfer_cell;
    r.d12_lower = d12_lower_constant(ds, transfer_cell);
    r.d12_lower_paper677 = d12_lower_constant(ds, 1.876677);
    r.d12_lower_paper697 = d12_lower_constant(ds, 1.876697);
    r.support_edge = lower_support_edge(ds);
    r.exception_exponent = r.support_edge - 1.0;
    // cheap content hash of the table for provenance
    unsigned long long h = 1469598103934665603ull;
    auto mix = [&h](double x) {
        unsigned long long b;
        static_assert(sizeof(b) == sizeof(x));
        std::memcpy(&b, &x, sizeof(b));
        h ^= b;
        h *= 1099511628211ull;
    };
    for (const auto& row : ds.wF)
        for (double x : row) mix(x);
    for (const auto& row : ds.wf)
        for (double x : row) mix(x);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    r.table_hash = buf;
    return r;
}

nlohmann::json ConstantsReport::to_json() const {
    nlohmann::json j;
    j["goldbach_upper"] = goldbach_upper;
    j["d12_lower"] = d12_lower;
    j["d12_lower_paper677"] = d12_lower_paper677;
    j["d12_lower_paper697"] = d12_lower_paper697;
    j["exception_exponent"] = exception_exponent;
    j["chen_integral"] = chen_integral;
    j["inputs"]["wF_0_1"] = cell_wF01;
    j["inputs"]["wf_2.25_1.5"] = cell_wf_225_15;
    j["inputs"]["transfer_cell"] = transfer_cell;
    j["inputs"]["support_edge"] = support_edge;
    j["inputs"]["table_hash"] = table_hash;
    return j;
}

}  // namespace xsieve
