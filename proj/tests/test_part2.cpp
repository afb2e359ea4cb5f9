#include <cmath>

#include <doctest.h>

#include "xsieve/classical.hpp"
#include "xsieve/numerics.hpp"
#include "xsieve/part2.hpp"

using namespace xsieve;

namespace {

const ClassicalFunctions& cls() {
    static ClassicalFunctions c;
    return c;
}

ScheduleConfig coarse_config() {
    ScheduleConfig cfg;
    cfg.u_step = 0.1;
    cfg.sweeps_first = 1;
    cfg.sweeps_boot = 0;
    cfg.sweeps_final = 0;
    cfg.alpha_sequence = {2.0, 2.0};
    cfg.ds_sweeps = 1;
    cfg.cycles_per_level = 2;
    cfg.convergence_eps = 1e9;
    return cfg;
}

}  // namespace

TEST_CASE("overflow term vanishes below the cap") {
    CHECK(DsOps::overflow_term(3.9, 4.0, 2.5, 3.75) == 0.0);
    CHECK(DsOps::overflow_term(4.0, 4.0, 2.5, 3.75) == 0.0);
    double v = DsOps::overflow_term(5.0, 4.0, 2.5, 3.75);
    CHECK(v == doctest::Approx((5.0 - 4.0) * 1.5 / (2.0 * 6.25) * 3.75).epsilon(1e-14));
    // continuity at the boundary
    CHECK(DsOps::overflow_term(4.0 + 1e-12, 4.0, 2.5, 3.75) < 1e-10);
}

TEST_CASE("branch split of the high-weight kernel") {
    CHECK(DsOps::branch_split(3.0) == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
    // split point satisfies 2 u1^2 = v^2 (the half-budget threshold)
    double u1 = DsOps::branch_split(4.5);
    CHECK(2.0 * u1 * u1 == doctest::Approx(4.5 * 4.5).epsilon(1e-12));
}

TEST_CASE("shift-cap split integrals") {
    // int_0^{1/u1} t/(1-t) dt matches the closed form used by the capped shift
    double u1 = 1.7;
    double closed = -std::log1p(-1.0 / u1) - 1.0 / u1;
    CHECK(power_log_ratio_integral(2.0, 1.0 / u1) == doctest::Approx(closed).epsilon(1e-13));
}

TEST_CASE("double-sieve context freezes the transfer constant") {
    ScheduleConfig cfg = coarse_config();
    SieveEngine eng(cls(), cfg);
    BoundTable p1 = eng.initial_table(2.0);
    eng.run_phase(p1, 1);
    DoubleSieveContext ctx = DoubleSieveContext::make(p1, cfg);
    CHECK(ctx.f2_0_2 > 0.0);
    CHECK(ctx.params.c4 == doctest::Approx(2.0 * ctx.f2_0_2).epsilon(1e-15));
    ScheduleConfig jr = cfg;
    jr.c4_mode = "jr";
    CHECK(DoubleSieveContext::make(p1, jr).params.c4 == 4.0);
    // alpha != 2 rejected
    BoundTable p35 = eng.initial_table(3.5);
    CHECK_THROWS_AS(DoubleSieveContext::make(p35, cfg), std::invalid_argument);
}

TEST_CASE("double sieve dominates the plain iteration") {
    ScheduleConfig cfg = coarse_config();
    SieveEngine eng(cls(), cfg);
    BoundTable p1 = eng.initial_table(2.0);
    eng.run_phase(p1, 1);
    DoubleSieveContext ctx = DoubleSieveContext::make(p1, cfg);
    DsResult ds = run_double_sieve(eng, ctx);
    for (int l = 0; l < p1.levels_f(); ++l)
        for (int i = 0; i < p1.u_count; ++i) {
            if (l <= p1.grid.n) CHECK(ds.table.wF[l][i] <= p1.wF[l][i] + 1e-12);
            CHECK(ds.table.wf[l][i] >= p1.wf[l][i] - 1e-12);
        }
    ds.table.check_ordering("ds");
}

TEST_CASE("capped kernel agrees with the plain kernel when the cap is slack") {
    // k=0 row: the capped descent reduces to the plain descent kernel
    ScheduleConfig cfg = coarse_config();
    cfg.ds_fine_v = false;
    cfg.ds_v_f25 = {5.0};
    cfg.v_f1 = {5.0};
    SieveEngine eng(cls(), cfg);
    BoundTable t = eng.initial_table(2.0);
    std::vector<double> plain(t.u_count, -1e300), capped(t.u_count, -1e300);
    eng.cand_lower_descent(t, 0, plain);
    DsOps::cand_capped_descent(eng, t, 0, 2.0 * t.wF_raw(0, 2.0), capped);
    for (double u : {2.5, 3.0, 4.0}) {
        int i = t.index_of(u);
        // the capped form may only improve on the plain one (min with the cap)
        CHECK(capped[i] >= plain[i] - 1e-9);
    }
}
