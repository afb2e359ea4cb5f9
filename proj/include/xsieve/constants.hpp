// Headline constants derived from converged bound tables: the binary
// representation upper constant, the almost-prime lower constant, and the
// exception-set exponent.
#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "xsieve/table.hpp"

namespace xsieve {

struct ConstantsReport {
    double goldbach_upper = 0.0;      // 4 * wF(0,1)
    double d12_lower = 0.0;           // with the engine's own transfer cell
    double d12_lower_paper677 = 0.0;  // with the literal 1.876677
    double d12_lower_paper697 = 0.0;  // with the literal 1.876697
    double exception_exponent = 0.0;  // u* - 1
    double chen_integral = 0.0;
    // inputs
    double cell_wF01 = 0.0;
    double cell_wf_225_15 = 0.0;
    double transfer_cell = 0.0;  // e^-gamma 2 F(0,2) used for d12
    double support_edge = 0.0;   // u* where the zero-weight lower row leaves 0
    std::string table_hash;

    nlohmann::json to_json() const;
};

// 4 * wF(0,1); asserts the weighted upper row is flat between u=1 and u=2.
double goldbach_upper_constant(const BoundTable& ds_table);

// int_0^(1/3) t ln(2-3t)/(1-t) dt
double chen_integral();

// 4*(a - 2.25*4*c*I): a = wf(2.25, 1.5), c the weighted transfer cell,
// I the logarithmic integral above.
double d12_lower_constant(const BoundTable& ds_table, double transfer_cell);

// u* - 1 where u* is the zero crossing of wf(0,.) on [1.6, 2.0].
double exception_exponent(const BoundTable& ds_table);
double lower_support_edge(const BoundTable& ds_table, double lo = 1.6, double hi = 2.0);

ConstantsReport make_constants_report(const BoundTable& ds_table, double transfer_cell);

}  // namespace xsieve
