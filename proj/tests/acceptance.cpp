// Acceptance suite: one line per criterion. Hard criteria gate the exit
// status; reproduction criteria are reported with their deviation counts.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "xsieve/classical.hpp"
#include "xsieve/config.hpp"
#include "xsieve/constants.hpp"
#include "xsieve/empirical.hpp"
#include "xsieve/numerics.hpp"
#include "xsieve/paper_tables.hpp"
#include "xsieve/part1.hpp"
#include "xsieve/part2.hpp"

using namespace xsieve;

namespace {

int failures = 0;

void line(int criterion, bool hard, bool pass, const std::string& detail) {
    const char* tag = hard ? (pass ? "PASS" : "FAIL") : (pass ? "pass (reported)" : "MISS (soft)");
    std::printf("criterion %d: %s — %s\n", criterion, tag, detail.c_str());
    if (hard && !pass) ++failures;
}

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

}  // namespace

int main() {
    ClassicalFunctions cls;
    const double eng = Constants::exp_neg_gamma();

    // --- criterion 1: closed-form oracle suite -----------------------------
    {
        double t0 = now_seconds();
        bool ok = true;
        for (double u = 1.0; u <= 3.0 + 1e-9; u += 0.001)
            ok &= std::fabs(eng * u * cls.jr_F(u) - 2.0) < 1e-10;
        for (double u = 2.0; u <= 4.0 + 1e-9; u += 0.001)
            ok &= std::fabs(eng * u * cls.jr_f(u) - 2.0 * std::log(u - 1.0)) < 1e-9;
        ok &= std::fabs(cls.buchstab_h(2.0) - (3.0 - 2.0 * std::log(2.0))) < 1e-12;
        for (double u = 1.0; u <= 2.0 + 1e-9; u += 0.001)
            ok &= std::fabs(cls.buchstab_w(u) - 1.0 / u) < 1e-12;
        double dt = now_seconds() - t0;
        ok &= dt < 1.0;
        line(1, true, ok, fmt("closed-form oracles (%.3f s)", dt));
    }

    // --- criterion 2: initialization checks --------------------------------
    {
        bool ok = std::fabs(eng * 2.0 * cls.tilde_F(2.0) - 2.0) < 1e-9;
        KGrid g2 = KGrid::build(2.0, 16);
        ok &= g2.levels[17] == 4.5 && g2.levels[18] == 8.0 && g2.levels[19] == 10.125 &&
              g2.levels[20] == 12.5 && g2.levels[21] == 15.125;
        KGrid g3 = KGrid::build(3.0, 16);
        ok &= std::fabs(g3.levels[17] - 10.85482) < 1e-5;
        line(2, true, ok, "seed function and weight grid values");
    }

    // --- run the full pipeline ---------------------------------------------
    ScheduleConfig cfg;
    if (const char* quick = std::getenv("XSIEVE_ACCEPT_QUICK")) {
        if (std::atoi(quick)) {
            cfg.u_step = 0.05;
            cfg.sweeps_first = 3;
            cfg.sweeps_boot = 2;
            cfg.sweeps_final = 3;
            cfg.ds_sweeps = 3;
        }
    }
    SieveEngine engine(cls, cfg);
    double t0 = now_seconds();
    Part1Result p1 = engine.run_part1();
    double part1_seconds = now_seconds() - t0;
    DoubleSieveContext ctx = DoubleSieveContext::make(p1.final, cfg);
    DsResult ds = run_double_sieve(engine, ctx);
    double total_seconds = now_seconds() - t0;

    // --- criterion 3: published-table reproduction (soft) ------------------
    {
        DeviationReport r2 = compare_to_paper(p1.final, paper_table2(), "table2");
        DeviationReport r3 = compare_to_paper(p1.final, paper_table3(), "table3");
        int total = r2.total + r3.total;
        int within = r2.within + r3.within;
        double frac = total ? double(within) / total : 1.0;
        line(3, false, frac >= 0.9,
             fmt("table2+table3: %d/%d cells within 5e-3 (%.1f%%), %zu deviations listed; "
                 "iteration %.0f s",
                 within, total, 100.0 * frac, r2.deviations.size() + r3.deviations.size(),
                 part1_seconds));
    }

    // --- criterion 4: double-sieve reproduction + hard sub-checks ----------
    {
        DeviationReport r4 = compare_to_paper(ds.table, paper_table4(), "table4");
        DeviationReport r5 = compare_to_paper(ds.table, paper_table5(), "table5");
        int total = r4.total + r5.total;
        int within = r4.within + r5.within;
        double frac = total ? double(within) / total : 1.0;
        line(4, false, frac >= 0.9,
             fmt("table4+table5: %d/%d cells within 5e-3 (%.1f%%)", within, total,
                 100.0 * frac));
        bool support = false;
        for (double u = 1.60; u <= 1.71 + 1e-9; u += ds.table.u_step)
            if (ds.table.wf_raw(0, u) > 0.0) support = true;
        line(4, true, support, "hard sub-check: lower support reaches u <= 1.71");
        double w01 = ds.table.wF_raw(0, 1.0);
        line(4, true, w01 <= 1.7340, fmt("hard sub-check: wF(0,1) = %.6f <= 1.7340", w01));
    }

    // --- criterion 5: headline constants ------------------------------------
    ConstantsReport rep = make_constants_report(ds.table, ctx.f2_0_2);
    {
        bool g = rep.goldbach_upper >= 6.90 && rep.goldbach_upper <= 6.94;
        line(5, true, g, fmt("goldbach_upper = %.6f in [6.90, 6.94]", rep.goldbach_upper));
        bool d = rep.d12_lower >= 2.25 && rep.d12_lower <= 2.30;
        line(5, true, d, fmt("d12_lower = %.6f in [2.25, 2.30]", rep.d12_lower));
        bool e = rep.exception_exponent >= 0.698 && rep.exception_exponent <= 0.706;
        line(5, true, e,
             fmt("exception_exponent = %.6f in [0.698, 0.706]", rep.exception_exponent));
        bool c = rep.chen_integral >= 0.01843 && rep.chen_integral <= 0.01847 &&
                 rep.chen_integral <= 0.01846 + 1e-5;
        line(5, true, c, fmt("chen_integral = %.8f in [0.01843, 0.01847]", rep.chen_integral));
    }

    // --- criterion 6: property suite ----------------------------------------
    {
        bool mono = true;
        {
            ScheduleConfig small = cfg;
            small.u_step = 0.05;
            small.sweeps_first = 1;
            small.sweeps_boot = 0;
            small.sweeps_final = 0;
            small.alpha_sequence = {2.0, 2.0};
            small.convergence_eps = 1e9;
            SieveEngine e2(cls, small);
            BoundTable t = e2.initial_table(2.0);
            BoundTable prev = t;
            for (int s = 0; s < 2; ++s) {
                e2.run_phase(t, 1);
                for (int l = 0; l < t.levels_f() && mono; ++l)
                    for (int i = 0; i < t.u_count; ++i) {
                        if (l <= t.grid.n && t.wF[l][i] > prev.wF[l][i] + 1e-12) mono = false;
                        if (t.wf[l][i] < prev.wf[l][i] - 1e-12) mono = false;
                    }
                prev = t;
            }
        }
        line(6, true, mono, "pointwise monotone improvement across sweeps");

        bool order = true;
        try {
            ds.table.check_ordering("acceptance");
            p1.final.check_ordering("acceptance");
        } catch (...) {
            order = false;
        }
        line(6, true, order, "wF >= wf everywhere");

        bool floor = true;
        for (int i = 0; i < p1.final.u_count; ++i) {
            double u = p1.final.u_at(i);
            if (p1.final.wF[0][i] > cls.weighted_F(u) + 1e-9) floor = false;
            if (p1.final.wf[0][i] < cls.weighted_f(u) - 1e-9) floor = false;
        }
        line(6, true, floor, "classical floor holds after the first sweep");

        bool quad = true;
        {
            auto f = [](double t) { return t * std::log(2.0 - 3.0 * t) / (1.0 - t); };
            double a = integrate(f, 0.0, 1.0 / 3.0, {1e-8, 60});
            double b = integrate(f, 0.0, 1.0 / 3.0, {5e-9, 60});
            quad = std::fabs(a - b) < 1e-8;
        }
        line(6, true, quad, "quadrature halving stability");

        bool det = true;
        {
            ScheduleConfig small = cfg;
            small.u_step = 0.1;
            small.sweeps_first = 1;
            small.sweeps_boot = 1;
            small.sweeps_final = 1;
            small.ds_sweeps = 1;
            small.convergence_eps = 1e9;
            SieveEngine e2(cls, small);
            PipelineResult a = run_pipeline(e2);
            PipelineResult b = run_pipeline(e2);
            det = a.ds_table.emit_csv() == b.ds_table.emit_csv() &&
                  a.part1.final.emit_csv() == b.part1.final.emit_csv();
        }
        line(6, true, det, "byte-identical rerun of the pipeline");

        bool conv = true;
        if (!p1.sweep_deltas.empty()) conv = p1.sweep_deltas.back() <= 1e-4;
        if (!ds.sweep_deltas.empty()) conv = conv && ds.sweep_deltas.back() <= 1e-4;
        line(6, true, conv,
             fmt("final sweep deltas %.2e / %.2e <= 1e-4",
                 p1.sweep_deltas.empty() ? 0.0 : p1.sweep_deltas.back(),
                 ds.sweep_deltas.empty() ? 0.0 : ds.sweep_deltas.back()));
    }

    // --- criterion 7: empirical suite ---------------------------------------
    {
        double t7 = now_seconds();
        PrimeTable pt = sieve_primes(1000000);
        bool pi_ok = pt.primes.size() == 78498;
        bool counts_ok = true;
        PrimeTable small = sieve_primes(2100);
        for (std::uint64_t N = 4; N <= 2000 && counts_ok; N += 2) {
            CountReport r = count_representations(N, small);
            std::uint64_t D = 0, D12 = 0;
            for (std::uint64_t p = 2; p < N; ++p) {
                if (!small.is_prime(p)) continue;
                std::uint64_t m = N - p;
                if (small.is_prime(m)) ++D;
                if (m > 1 && omega(m, small) <= 2) ++D12;
            }
            counts_ok = r.D == D && r.D12 == D12;
        }
        bool ex_ok = exception_scan(1000000, pt).empty();
        double c2 = singular_series(2, 2000000);
        bool cs_ok = std::fabs(singular_series(6, 2000000) - 2.0 * c2) < 1e-9;
        double dt = now_seconds() - t7;
        bool ok = pi_ok && counts_ok && ex_ok && cs_ok && dt < 120.0;
        line(7, true, ok,
             fmt("pi(1e6)=%zu, brute-force counts to 2000, empty exception scan, "
                 "C(6)=2C(2) (%.1f s)",
                 pt.primes.size(), dt));
    }

    // --- criterion 8: bound sanity at finite scale (soft) -------------------
    {
        PrimeTable pt = sieve_primes(10000000);
        std::mt19937_64 rng(20260810);
        std::uniform_int_distribution<std::uint64_t> dist(50000, 5000000);
        bool all_ok = true;
        double min_up = 1e9, min_lo = 1e9;
        for (int i = 0; i < 20; ++i) {
            std::uint64_t N = 2 * dist(rng);
            CountReport r = count_representations(N, pt);
            BoundVerdict v = compare_bounds(r, rep.goldbach_upper, rep.d12_lower);
            all_ok &= v.upper_ok && v.lower_ok;
            min_up = std::min(min_up, v.upper_margin);
            min_lo = std::min(min_lo, v.lower_margin);
        }
        line(8, false, all_ok,
             fmt("20 random even N in [1e5,1e7]: min upper margin %.3f, min lower margin %.3f",
                 min_up, min_lo));
    }

    std::printf("acceptance total: %s (pipeline %.0f s)\n", failures ? "FAIL" : "PASS",
                total_seconds);
    return failures ? 1 : 0;
}
