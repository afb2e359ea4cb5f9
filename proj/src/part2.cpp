#include "xsieve/part2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "xsieve/numerics.hpp"

namespace xsieve {

DoubleSieveContext DoubleSieveContext::make(const BoundTable& part1_final,
                                            const ScheduleConfig& cfg) {
    if (std::fabs(part1_final.grid.alpha - 2.0) > 1e-12)
        throw std::invalid_argument("double sieve requires an alpha=2 table");
    DoubleSieveContext ctx;
    ctx.part1_table = part1_final;
    ctx.f2_0_2 = part1_final.wF_raw(0, 2.0);
    if (!(ctx.f2_0_2 > 0.0)) throw std::logic_error("double sieve: nonpositive transfer cell");
    if (std::fabs(ctx.f2_0_2 - 1.876697) > 5e-3)
        std::fprintf(stderr,
                     "warning: hand-off cell wF(0,2)=%.6f differs from 1.876697 by more than 5e-3\n",
                     ctx.f2_0_2);
    ctx.params.c4 = cfg.c4_mode == "jr" ? 4.0 : 2.0 * ctx.f2_0_2;
    return ctx;
}

double DsOps::overflow_term(double kt, double kn, double t, double c4) {
    if (kt <= kn) return 0.0;
    return (kt - kn) * (t - 1.0) / (2.0 * t * t) * c4;
}

// Lower descent whose upper kernel is capped by the frozen majorant constant.
// Unlike the plain descent there is no dead zone below u0: where the delay
// weight overflows the grid, the kernel switches to the capped form plus an
// overflow term.
void DsOps::cand_capped_descent(const SieveEngine& e, const BoundTable& s, int l,
                                double c4, std::vector<double>& c) {
    const int n = s.grid.n;
    if (l > n + 1) return;
    const double k = s.grid.levels[l];
    const double kn = s.grid.k_top();
    const double sqrtk = std::sqrt(k);
    const double top = s.u_at(s.u_count - 1);

    int lo = e.first_index_above(s, std::max(1.0, sqrtk), true);
    if (lo >= s.u_count - 1) return;
    auto kernel = [&](double t) {
        double den = t * t - k;
        if (den < 1e-12) den = 1e-12;
        double kt = k <= 0.0 ? 0.0 : k * (t - 1.0) * (t - 1.0) / den;
        double scal = den / (t * t * (t - 1.0));
        double g;
        if (kt <= kn) {
            g = std::min(s.wF_breve(kt, t - 1.0),
                         (t - 1.0 + kt / (2.0 * (t - 1.0))) * c4);
        } else {
            g = std::min(s.wF_at(n, t - 1.0),
                         (t - 1.0 + kt / (2.0 * (t - 1.0))) * c4) +
                overflow_term(kt, kn, t, c4);
        }
        return scal * g;
    };
    CumulativeIntegral G(kernel, s.u_at(lo), top, e.fine_step());

    if (e.config().ds_fine_v) {
        // maximize over every grid anchor v > u via a suffix maximum
        std::vector<double> pref(s.u_count, 0.0), best(s.u_count + 1, -1e300);
        for (int i = lo; i < s.u_count; ++i) pref[i] = G.between(s.u_at(lo), s.u_at(i));
        for (int i = s.u_count - 1; i >= lo; --i)
            best[i] = std::max(best[i + 1], s.wf[l][i] - pref[i]);
        for (int i = lo; i < s.u_count - 1; ++i)
            c[i] = std::max(c[i], pref[i] + best[i + 1]);
    } else {
        for (double v : e.config().ds_v_f25) {
            v = std::min(v, top);
            if (v <= s.u_at(lo) + 1e-12) continue;
            double anchor = s.wf_at(l, v);
            for (int i = lo; i < s.u_count; ++i) {
                double u = s.u_at(i);
                if (u >= v - 1e-12) break;
                c[i] = std::max(c[i], anchor - G.between(u, v));
            }
        }
    }
}

// High-weight rows: anchor at v = sqrt(2k); below the branch split u1 the
// kernel is replaced by the capped logarithmic form.
void DsOps::cand_high_weight_capped(const SieveEngine& e, const BoundTable& s, int l,
                                    double c4, std::vector<double>& c) {
    const int n = s.grid.n;
    if (l < n + 1 || l > n + 5) return;
    const double k = s.grid.levels[l];
    double v = std::sqrt(2.0 * k);
    if (v > s.u_at(s.u_count - 1) + 1e-9) return;
    v = std::min(v, s.u_at(s.u_count - 1));
    const double u1 = branch_split(v);
    int lo = e.first_index_above(s, 1.0, true);
    if (lo >= s.u_count || s.u_at(lo) >= v - 1e-12) return;
    auto br1 = [&](double t) {
        return s.wF_at(0, v * (1.0 - 1.0 / t)) / (2.0 * (t - 1.0));
    };
    CumulativeIntegral B(br1, std::max(u1, s.u_at(lo)), v, e.fine_step());
    double anchor = s.wf_at(0, v);
    double tail = B.between(u1, v);
    for (int i = lo; i < s.u_count; ++i) {
        double u = s.u_at(i);
        if (u >= v - 1e-12) break;
        double val;
        if (u >= u1) {
            val = anchor - B.between(u, v);
        } else {
            double capped = 0.5 * std::log(v / u1) * (u1 - u) +
                            (u1 - u - u * std::log(u1 / u));
            val = anchor - tail - c4 * capped;
        }
        c[i] = std::max(c[i], val);
    }
}

// Zero-weight row with the capped tail: anchor at v >= 3, pay the capped
// logarithmic budget on [u, v].
void DsOps::cand_zero_row_capped(const SieveEngine& e, const BoundTable& s,
                                 double c4, std::vector<double>& c) {
    const double top = s.u_at(s.u_count - 1);
    int lo = e.first_index_above(s, 1.0, true);
    if (lo >= s.u_count) return;
    for (double v : e.config().ds_v_f27) {
        if (v < 3.0 - 1e-12) continue;
        v = std::min(v, top);
        if (s.u_at(lo) >= v - 1e-12) continue;
        auto kern = [&](double t) {
            return s.wF_at(0, v * (1.0 - 1.0 / t)) / (2.0 * (t - 1.0));
        };
        CumulativeIntegral B(kern, s.u_at(lo), v, e.fine_step());
        double anchor = s.wf_at(0, v);
        for (int i = lo; i < s.u_count; ++i) {
            double u = s.u_at(i);
            if (u >= v - 1e-12) break;
            double capped = 0.5 * std::log(v / u) * c4;
            if (e.config().f27_outer_weight) capped *= u;
            c[i] = std::max(c[i], anchor - B.between(u, v) - capped);
        }
    }
}

// Zero-weight row via a weight shift whose correction splits at the level
// where the capped majorant overtakes the upper row.
void DsOps::cand_zero_row_shift_capped(const SieveEngine& e, const BoundTable& s,
                                       double c4, std::vector<double>& c) {
    (void)e;
    const int n = s.grid.n;
    for (int i = 0; i < s.u_count; ++i) {
        double u = s.u_at(i);
        if (u <= 1.0 + 1e-9) continue;
        double f0u = s.wF[0][i] / u;
        double r = f0u / c4;
        if (r >= 1.0 - 1e-12) continue;
        double u1 = 1.0 / (1.0 - r);
        if (u1 <= u + 1e-9) continue;  // no split available; the plain shift covers this case
        double i1 = -std::log1p(-1.0 / u1) - 1.0 / u1;
        double i2 = 0.5 * (1.0 / (u * u) - 1.0 / (u1 * u1));
        for (int l = 1; l <= n; ++l) {
            double k = s.grid.levels[l];
            double val = s.wf[l][i] - u * (f0u * k * i1 + c4 * k * i2);
            if (val > c[i]) c[i] = val;
        }
    }
}

DsResult run_double_sieve(const SieveEngine& eng, const DoubleSieveContext& ctx) {
    DsResult res;
    res.table = ctx.part1_table;
    res.sweep_deltas = eng.run_phase(res.table, eng.config().ds_sweeps, &ctx.params);
    return res;
}

PipelineResult run_pipeline(const SieveEngine& eng) {
    PipelineResult pr;
    pr.part1 = eng.run_part1();
    pr.ds_ctx = DoubleSieveContext::make(pr.part1.final, eng.config());
    DsResult ds = run_double_sieve(eng, pr.ds_ctx);
    pr.ds_table = std::move(ds.table);
    return pr;
}

}  // namespace xsieve
