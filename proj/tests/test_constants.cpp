#include <cmath>

#include <doctest.h>

#include "xsieve/constants.hpp"
#include "xsieve/table.hpp"

using namespace xsieve;

namespace {

// synthetic table: flat upper row, lower row ramping up from a chosen edge
BoundTable synthetic(double upper, double edge, double slope) {
    KGrid g = KGrid::build(2.0, 16);
    BoundTable t = BoundTable::zeros(g, 1.0, 0.01, 5.0);
    for (int l = 0; l < t.levels_F(); ++l)
        for (int i = 0; i < t.u_count; ++i) t.wF[l][i] = upper;
    for (int l = 0; l < t.levels_f(); ++l)
        for (int i = 0; i < t.u_count; ++i) {
            double u = t.u_at(i);
            t.wf[l][i] = std::max(0.0, slope * (u - edge));
        }
    return t;
}

}  // namespace

TEST_CASE("chen integral value and trivial endpoint") {
    double v = chen_integral();
    CHECK(v <= 0.01846);
    CHECK(std::fabs(v - 0.018457) < 1e-5);
    // integrand vanishes at t=0
    CHECK(0.0 * std::log(2.0) / 1.0 == 0.0);
}

TEST_CASE("upper constant reads the flat row") {
    BoundTable t = synthetic(1.728908, 1.702, 2.6);
    CHECK(goldbach_upper_constant(t) == doctest::Approx(4.0 * 1.728908).epsilon(1e-12));
    // non-flat rows are rejected
    t.wF[0][t.index_of(1.0)] += 1e-3;
    CHECK_THROWS_AS(goldbach_upper_constant(t), std::logic_error);
}

TEST_CASE("d12 composition") {
    BoundTable t = synthetic(1.73, 1.0, 1.0);  // wf(2.25-level, 1.5) = 0.5
    double I = chen_integral();
    double c = 1.876677;
    double expect = 4.0 * (0.5 - 2.25 * 4.0 * c * I);
    CHECK(d12_lower_constant(t, c) == doctest::Approx(expect).epsilon(1e-12));
    // zero transfer cell drops the subtraction entirely
    CHECK(d12_lower_constant(t, 0.0) == doctest::Approx(4.0 * 0.5).epsilon(1e-12));
    // linearity in the transfer cell, checked by finite differences
    double d1 = d12_lower_constant(t, 1.0);
    double d2 = d12_lower_constant(t, 2.0);
    CHECK(d2 - d1 == doctest::Approx(-2.25 * 4.0 * I * 4.0).epsilon(1e-9));
}

TEST_CASE("paper arithmetic reproduces the published lower constant") {
    // 4 (0.8794 - 2.25*4*1.876677*0.01846) rounds to 2.27
    double d = 4.0 * (0.8794 - 2.25 * 4.0 * 1.876677 * 0.01846);
    CHECK(d == doctest::Approx(2.27).epsilon(2e-3));
}

TEST_CASE("exception exponent from the support edge") {
    BoundTable t = synthetic(1.728908, 1.702, 2.6);
    CHECK(std::fabs(lower_support_edge(t) - 1.702) < 0.011);  // edge resolved to one grid cell
    CHECK(std::fabs(exception_exponent(t) - 0.702) < 0.011);
    // degenerate: lower bound positive on the whole bracket
    BoundTable bad = synthetic(1.73, 1.0, 1.0);
    CHECK_THROWS_AS(lower_support_edge(bad), std::runtime_error);
}

TEST_CASE("report carries inputs and both published transfer variants") {
    BoundTable t = synthetic(1.728908, 1.702, 2.6);
    ConstantsReport r = make_constants_report(t, 1.876697);
    CHECK(r.goldbach_upper == doctest::Approx(4.0 * 1.728908));
    CHECK(std::fabs(r.exception_exponent - 0.702) < 0.011);
    CHECK(r.d12_lower_paper677 >= r.d12_lower_paper697);  // smaller transfer cell subtracts less
    CHECK(!r.table_hash.empty());
}
