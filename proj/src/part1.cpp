#include "xsieve/part1.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "xsieve/numerics.hpp"
#include "xsieve/part2.hpp"

namespace xsieve {

namespace {

// Delay kernel weight k(t) = k (t-1)^a / (t^a - k), clamped into [0, cap].
double delay_weight(double k, double alpha, double cap, double t) {
    if (k <= 0.0) return 0.0;
    double ta = std::pow(t, alpha);
    double den = ta - k;
    if (den <= 1e-12) return cap;
    return std::clamp(k * std::pow(t - 1.0, alpha) / den, 0.0, cap);
}

}  // namespace

struct SieveEngine::ProfiledPass {
    double v = 0.0;
    double aa = 0.0;
    int form = 1;
    std::vector<double> nodes;      // t grid on [2, v]
    std::vector<double> scal;       // (1 - k(a,t)/t^a)/(t-1)
    std::vector<double> karg;       // clamped k(t)/R(t), argument of the lower read
    std::vector<double> kt;         // running-min weight profile k(t)
    std::vector<double> h_over_t;   // H(a,v,t)/t
};

SieveEngine::SieveEngine(const ClassicalFunctions& cls, ScheduleConfig cfg)
    : cls_(cls), cfg_(std::move(cfg)) {
    // anchor the grid just above 0.2 so that integer u (2.0 in particular)
    // always lands on a sample
    cfg_.u_min = 0.2 + cfg_.u_step;
    cfg_.validate();
}

double SieveEngine::u0_of_level(const KGrid& grid, int level) const {
    if (level <= 0) return 2.0;
    double k = grid.levels[level];
    double kn = grid.k_top();
    double alpha = grid.alpha;
    auto g = [&](double t) {
        return k * std::pow(t - 1.0, alpha) - kn * (std::pow(t, alpha) - k);
    };
    double t0 = std::pow(k, 1.0 / alpha) + 1e-7;
    // the delay weight either exceeds the cap near its pole (crossing found by
    // the scan) or never reaches it, in which case there is no dead zone
    double ul = 2.0;
    double prev = g(t0);
    for (double t = t0 + 0.125; t <= 50.0; t += 0.125) {
        double cur = g(t);
        if (prev > 0.0 && cur <= 0.0) {
            ul = find_root(g, t - 0.125, t, 1e-10);
            break;
        }
        prev = cur;
    }
    return std::clamp(ul, 2.0, 3.0);
}

int SieveEngine::first_index_above(const BoundTable& t, double u, bool strict) const {
    double pos = (u - t.u_min) / t.u_step;
    int i = strict ? static_cast<int>(std::floor(pos + 1e-9)) + 1
                   : static_cast<int>(std::ceil(pos - 1e-9));
    return std::clamp(i, 0, t.u_count);
}

BoundTable SieveEngine::initial_table(double alpha) const {
    KGrid grid = KGrid::build(alpha, cfg_.n_levels);
    BoundTable t = BoundTable::zeros(grid, cfg_.u_min, cfg_.u_step, cfg_.u_max);
    const int n = grid.n;
    const double kn = grid.k_top();
    const double kn1 = grid.levels[n + 1];
    const double eng = Constants::exp_neg_gamma();

    for (int i = 0; i < t.u_count; ++i) {
        double u = t.u_at(i);
        double w0 = cls_.weighted_F(u);
        t.wF[0][i] = w0;
        double wn;
        if (u >= 4.0)
            wn = cls_.weighted_F(u) +
                 kn / (alpha * std::pow(u, alpha - 1.0)) * cls_.weighted_F(u - 1.0) / (u - 1.0);
        else if (u >= 2.0)
            wn = eng * u * cls_.tilde_F(u);
        else
            wn = 0.0;  // filled from the u=2 value below
        t.wF[n][i] = wn;
        if (u >= 2.0)
            for (int l = 1; l < n; ++l) {
                double k = grid.levels[l];
                t.wF[l][i] = (1.0 - k / kn) * w0 + (k / kn) * wn;
            }

        double p0 = cls_.weighted_f(u);
        t.wf[0][i] = p0;
        double pn1 = 0.0;
        if (u >= 2.0)
            pn1 = p0 + kn1 / (alpha * std::pow(u, alpha - 1.0)) * cls_.weighted_f(u - 1.0) / (u - 1.0);
        t.wf[n + 1][i] = pn1;
        for (int l = 1; l <= n; ++l) {
            double k = grid.levels[l];
            t.wf[l][i] = (1.0 - k / kn1) * p0 + (k / kn1) * pn1;
        }
        // rows above n+1 start at zero and are built by the high-weight updates
    }
    // constant continuation of the upper rows below u=2 (weighted form is flat)
    int i2 = t.index_of(2.0);
    for (int l = 1; l <= n; ++l)
        for (int i = 0; i < i2; ++i) t.wF[l][i] = t.wF[l][i2];

    t.flat_u.assign(t.levels_f(), 2.0);
    for (int l = 0; l <= n + 1; ++l) t.flat_u[l] = u0_of_level(grid, l);
    for (int l = 0; l <= n; ++l) flat_refresh(t, l);
    t.check_ordering("init");
    return t;
}

void SieveEngine::reseed_rows(BoundTable& t) const {
    const int n = t.grid.n;
    const double alpha = t.grid.alpha;
    const double kn = t.grid.k_top();
    const double kn1 = t.grid.levels[n + 1];
    for (int i = 0; i < t.u_count; ++i) {
        double u = t.u_at(i);
        if (u >= 4.0) {
            double cand = t.wF[0][i] +
                          kn / (alpha * std::pow(u, alpha - 1.0)) * t.wF_at(0, u - 1.0) / (u - 1.0);
            t.wF[n][i] = std::min(t.wF[n][i], cand);
        }
        if (u >= 2.0) {
            for (int l = 1; l < n; ++l) {
                double k = t.grid.levels[l];
                double cand = (1.0 - k / kn) * t.wF[0][i] + (k / kn) * t.wF[n][i];
                t.wF[l][i] = std::min(t.wF[l][i], cand);
            }
            double candf = t.wf[0][i] +
                           kn1 / (alpha * std::pow(u, alpha - 1.0)) * t.wf_at(0, u - 1.0) / (u - 1.0);
            t.wf[n + 1][i] = std::max(t.wf[n + 1][i], candf);
        }
        for (int l = 1; l <= n; ++l) {
            double k = t.grid.levels[l];
            double cand = (1.0 - k / kn1) * t.wf[0][i] + (k / kn1) * t.wf[n + 1][i];
            t.wf[l][i] = std::max(t.wf[l][i], cand);
        }
    }
    for (int l = 0; l <= n; ++l) flat_refresh(t, l);
    t.check_ordering("reseed");
}

void SieveEngine::flat_refresh(BoundTable& t, int level) const {
    double u0 = t.flat_u[level];
    double anchor = t.wF_at(level, u0);
    for (int i = 0; i < t.u_count && t.u_at(i) < u0 - 1e-12; ++i)
        t.wF[level][i] = std::min(t.wF[level][i], anchor);
}

// ---------------------------------------------------------------------------
// lower-bound candidates

void SieveEngine::cand_lower_descent(const BoundTable& s, int l, std::vector<double>& c) const {
    if (l > s.grid.n + 1) return;
    const double k = s.grid.levels[l];
    const double kn = s.grid.k_top();
    const double alpha = s.grid.alpha;
    const double u0 = s.flat_u[l];
    for (double v : cfg_.v_f1) {
        v = std::min(v, s.u_at(s.u_count - 1));
        int lo = first_index_above(s, u0 - 1e-12, false);  // valid from u0 on
        if (lo >= s.u_count || s.u_at(lo) >= v - 1e-12) continue;
        auto integrand = [&](double t) {
            double ta = std::pow(t, alpha);
            double scal = (ta - k) / (ta * (t - 1.0));
            return scal * s.wF_breve(delay_weight(k, alpha, kn, t), t - 1.0);
        };
        CumulativeIntegral G(integrand, s.u_at(lo), v, fine_step());
        double anchor = s.wf_at(l, v);
        for (int i = lo; i < s.u_count; ++i) {
            double u = s.u_at(i);
            if (u >= v - 1e-12) break;
            c[i] = std::max(c[i], anchor - G.between(u, v));
        }
    }
}

void SieveEngine::cand_lower_half_weight(const BoundTable& s, int l, std::vector<double>& c) const {
    if (l > s.grid.n + 1) return;
    const double k = s.grid.levels[l];
    const double kn = s.grid.k_top();
    const double alpha = s.grid.alpha;
    const double cl = k > 0.0 ? std::pow(2.0 * k, 1.0 / alpha) : 0.0;
    int lo = first_index_above(s, 1.0, true);
    for (double v : cfg_.v_f2) {
        v = std::min(v, s.u_at(s.u_count - 1));
        if (lo >= s.u_count || s.u_at(lo) >= v - 1e-12) continue;
        // the shifted weight 2k(1-1/t)^a must stay on the grid for t <= v
        if (2.0 * k * std::pow(1.0 - 1.0 / v, alpha) > kn + 1e-9) continue;
        auto d1_integrand = [&](double t) {
            if (t <= 1.0 + 1e-9) return 0.0;
            double kt = std::clamp(2.0 * k * std::pow(1.0 - 1.0 / t, alpha), 0.0, kn);
            return s.wF_breve(kt, v * (1.0 - 1.0 / t)) / (t - 1.0);
        };
        CumulativeIntegral D1(d1_integrand, s.u_at(lo), v, fine_step());
        CumulativeIntegral D2;
        double d2lo = std::max(cl, s.u_at(lo));
        if (d2lo < v - 1e-12) {
            auto rho = [&](double t) { return (0.5 - k / std::pow(t, alpha)) / (t - 1.0); };
            D2 = CumulativeIntegral(rho, d2lo, v, fine_step());
        }
        double anchor = s.wf_at(l, v);
        for (int i = lo; i < s.u_count; ++i) {
            double u = s.u_at(i);
            if (u >= v - 1e-12) break;
            double d2 = D2.empty() ? 0.0 : s.wF_at(0, u) * D2.between(std::max(u, cl), v);
            c[i] = std::max(c[i], anchor - 0.5 * D1.between(u, v) - d2);
        }
    }
}

void SieveEngine::cand_lower_convex(const BoundTable& s, int l, std::vector<double>& c) const {
    const int n = s.grid.n;
    if (l < 1 || l > n) return;
    const double kl = s.grid.levels[l];
    for (int i = 0; i < s.u_count; ++i) {
        double best = c[i];
        for (int h = 0; h < l; ++h) {
            double kh = s.grid.levels[h];
            double fh = s.wf[h][i];
            for (int m = l + 1; m <= n + 1; ++m) {
                double km = s.grid.levels[m];
                double beta = (km - kl) / (km - kh);
                double val = beta * fh + (1.0 - beta) * s.wf[m][i];
                if (val > best) best = val;
            }
        }
        c[i] = best;
    }
}

void SieveEngine::cand_lower_weight_shift(const BoundTable& s, int l, std::vector<double>& c) const {
    const int n = s.grid.n;
    if (l > n) return;
    const double kl = s.grid.levels[l];
    std::vector<double> J = jweights(s.grid.alpha);
    for (int i = 0; i < s.u_count; ++i) {
        double u = s.u_at(i);
        if (u <= 1.0 + 1e-12) continue;  // the correction integral hits its pole
        double corr = s.wF[0][i] * J[i];
        for (int h = l + 1; h <= n + 4; ++h) {
            double val = s.wf[h][i] - (s.grid.levels[h] - kl) * corr;
            if (val > c[i]) c[i] = val;
        }
    }
}

void SieveEngine::cand_lower_high_weight(const BoundTable& s, int l, std::vector<double>& c) const {
    const int n = s.grid.n;
    if (l < n + 2 || l > n + 4) return;
    const double k = s.grid.levels[l];
    double v = std::min(std::pow(2.0 * k, 1.0 / s.grid.alpha), s.u_at(s.u_count - 1));
    int lo = first_index_above(s, 1.0, true);
    if (lo < s.u_count && s.u_at(lo) < v - 1e-12) {
        auto integrand = [&](double t) {
            return s.wF_at(0, v * (1.0 - 1.0 / t)) / (2.0 * (t - 1.0));
        };
        CumulativeIntegral B(integrand, s.u_at(lo), v, fine_step());
        double anchor = s.wf_at(0, v);
        for (int i = lo; i < s.u_count; ++i) {
            double u = s.u_at(i);
            if (u >= v - 1e-12) break;
            c[i] = std::max(c[i], anchor - B.between(u, v));
        }
    }
    for (int i = 0; i < s.u_count; ++i) c[i] = std::max(c[i], s.wf[l - 1][i]);
}

// ---------------------------------------------------------------------------
// upper-bound candidates

void SieveEngine::cand_upper_descent(const BoundTable& s, int l, std::vector<double>& c) const {
    const double k = s.grid.levels[l];
    const double kn = s.grid.k_top();
    const double alpha = s.grid.alpha;
    const double u0 = s.flat_u[l];
    for (double v : cfg_.v_F1) {
        v = std::min(v, s.u_at(s.u_count - 1));
        int lo = first_index_above(s, u0 - 1e-12, false);
        if (lo >= s.u_count || s.u_at(lo) >= v - 1e-12) continue;
        auto integrand = [&](double t) {
            double ta = std::pow(t, alpha);
            double scal = (ta - k) / (ta * (t - 1.0));
            return scal * s.wf_breve(delay_weight(k, alpha, kn, t), t - 1.0);
        };
        CumulativeIntegral G(integrand, s.u_at(lo), v, fine_step());
        double anchor = s.wF_at(l, v);
        for (int i = lo; i < s.u_count; ++i) {
            double u = s.u_at(i);
            if (u >= v - 1e-12) break;
            c[i] = std::min(c[i], anchor - G.between(u, v));
        }
    }
}

void SieveEngine::cand_upper_weight_shift(const BoundTable& s, int l, std::vector<double>& c) const {
    const int n = s.grid.n;
    if (l >= n) return;
    const double kl = s.grid.levels[l];
    std::vector<double> K = zero_row_shift_corr(s);
    int lo = first_index_above(s, s.flat_u[l] - 1e-12, false);
    for (int i = lo; i < s.u_count; ++i)
        for (int h = l + 1; h <= n; ++h) {
            double val = s.wF[h][i] - (s.grid.levels[h] - kl) * K[i];
            if (val < c[i]) c[i] = val;
        }
}

std::vector<SieveEngine::ProfiledPass> SieveEngine::build_profiled_passes(const KGrid& grid) const {
    std::vector<ProfiledPass> passes;
    const double alpha = grid.alpha;
    const double kn = grid.k_top();
    const double kn1 = grid.levels[grid.n + 1];
    for (double v : cfg_.v_F3) {
        if (v <= 2.0 + cfg_.u_step) continue;
        for (int form = 1; form <= 2; ++form) {
            for (double aa = cfg_.a_min; aa <= kn + 1e-9; aa += cfg_.a_step) {
                ProfiledPass p;
                p.v = v;
                p.aa = aa;
                p.form = form;
                double t = 2.0;
                while (t < v - 1e-12) {
                    p.nodes.push_back(t);
                    t += fine_step();
                }
                p.nodes.push_back(v);
                size_t m = p.nodes.size();
                p.scal.resize(m);
                p.karg.resize(m);
                p.kt.resize(m);
                p.h_over_t.resize(m);
                double kconst = aa / (std::pow(1.0 - 1.0 / v, alpha) + aa / std::pow(v, alpha));
                for (size_t j = 0; j < m; ++j) {
                    double tj = p.nodes[j];
                    double kat = form == 1
                                     ? std::min(kn1, std::pow(tj - 1.0, alpha) / aa)
                                     : aa / (std::pow(1.0 - 1.0 / tj, alpha) + aa / std::pow(v, alpha));
                    double ktj = form == 1 ? kat : kconst;
                    double ta = std::pow(tj, alpha);
                    double R = (1.0 - kat / ta) / std::pow(1.0 - 1.0 / tj, alpha);
                    p.scal[j] = (1.0 - kat / ta) / (tj - 1.0);
                    p.karg[j] = R > 1e-12 ? std::clamp(ktj / R, 0.0, kn1) : kn1;
                    p.kt[j] = ktj;
                    double x = tj / (v * (tj - 1.0));
                    p.h_over_t[j] =
                        x < 1.0 - 1e-9
                            ? std::pow(1.0 - 1.0 / tj, alpha - 1.0) *
                                  power_log_ratio_integral(alpha, x) / tj
                            : 0.0;  // outside the kernel's validity; guarded per u below
                }
                passes.push_back(std::move(p));
            }
        }
    }
    return passes;
}

void SieveEngine::cand_upper_profiled(const BoundTable& s, int l,
                                      const std::vector<ProfiledPass>& passes,
                                      std::vector<double>& c) const {
    const int n = s.grid.n;
    if (l > n) return;
    const double kl = s.grid.levels[l];
    const double kn1 = s.grid.levels[n + 1];
    const double alpha = s.grid.alpha;
    double ustart = std::max(s.flat_u[l], 2.0);
    // shared lower-read and zero-row factors per pass
    for (const ProfiledPass& p : passes) {
        int lo = first_index_above(s, ustart - 1e-12, false);
        if (lo >= s.u_count || s.u_at(lo) >= p.v - 1e-12) continue;
        size_t m = p.nodes.size();
        std::vector<double> av(m), bv(m), cv(m);
        for (size_t j = 0; j < m; ++j) {
            double tj = p.nodes[j];
            double w0 = s.wF_at(0, tj - 1.0) * p.h_over_t[j];
            av[j] = p.scal[j] * s.wf_breve(p.karg[j], tj - 1.0);
            bv[j] = p.kt[j] * w0;
            cv[j] = w0;
        }
        CumulativeIntegral A = CumulativeIntegral::from_samples(p.nodes, av);
        CumulativeIntegral B = CumulativeIntegral::from_samples(p.nodes, bv);
        CumulativeIntegral C = CumulativeIntegral::from_samples(p.nodes, cv);
        double anchor = s.wF_at(l, p.v);
        for (int i = lo; i < s.u_count; ++i) {
            double u = s.u_at(i);
            if (u >= p.v - 1e-12) break;
            double kat_u = p.form == 1
                               ? std::min(kn1, std::pow(u - 1.0, alpha) / p.aa)
                               : p.aa / (std::pow(1.0 - 1.0 / u, alpha) + p.aa / std::pow(p.v, alpha));
            double kmin_u = p.form == 1 ? kat_u : p.kt.back();
            if (kl > kmin_u + 1e-12) continue;                       // level must stay below the profile
            if (kat_u > std::min(kn1, std::pow(u, alpha)) + 1e-9) continue;  // profile validity at u
            double val = anchor - A.between(u, p.v) + B.between(u, p.v) - kl * C.between(u, p.v);
            if (val < c[i]) c[i] = val;
        }
    }
}

void SieveEngine::cand_upper_convex(const BoundTable& s, int l, std::vector<double>& c) const {
    const int n = s.grid.n;
    if (l < 1 || l >= n) return;
    double beta = (s.grid.levels[l] - s.grid.levels[l - 1]) /
                  (s.grid.levels[l + 1] - s.grid.levels[l - 1]);
    int lo = first_index_above(s, s.flat_u[l] - 1e-12, false);
    for (int i = lo; i < s.u_count; ++i) {
        double val = beta * s.wF[l + 1][i] + (1.0 - beta) * s.wF[l - 1][i];
        if (val < c[i]) c[i] = val;
    }
}

// ---------------------------------------------------------------------------
// correction integrals

std::vector<double> SieveEngine::jweights(double alpha) const {
    static thread_local std::map<long long, std::vector<double>> cache;
    long long key = llround(alpha * 1024.0) * 100000 +
                    llround(cfg_.u_step * 1e6) % 100000;
    auto it = cache.find(key);
    int count = static_cast<int>(std::floor((cfg_.u_max - cfg_.u_min) / cfg_.u_step + 0.5)) + 1;
    if (it != cache.end() && static_cast<int>(it->second.size()) == count) return it->second;
    std::vector<double> J(count, 0.0);
    for (int i = 0; i < count; ++i) {
        double u = cfg_.u_min + i * cfg_.u_step;
        if (u > 1.0 + 1e-12) J[i] = power_log_ratio_integral(alpha, 1.0 / u);
    }
    cache[key] = J;
    return J;
}

std::vector<double> SieveEngine::zero_row_shift_corr(const BoundTable& s) const {
    std::vector<double> out(s.u_count, 0.0);
    // support edge of the zero-weight lower row
    double sstar = s.u_at(s.u_count - 1);
    for (int i = 0; i < s.u_count; ++i)
        if (s.wf[0][i] > 0.0) {
            sstar = s.u_at(i > 0 ? i - 1 : 0);
            break;
        }
    const double alpha = s.grid.alpha;
    for (int i = 0; i < s.u_count; ++i) {
        double u = s.u_at(i);
        if (u <= sstar) continue;
        double tmax = std::min(1.0 / u, 1.0 - sstar / u);
        if (tmax <= 0.0) continue;
        // composite Simpson; integrand t^(a-1) wf(0, u(1-t)) / (1-t)
        const int steps = 32;
        double h = tmax / steps;
        double acc = 0.0;
        auto g = [&](double tt) {
            return std::pow(tt, alpha - 1.0) * s.wf_at(0, u * (1.0 - tt)) / (1.0 - tt);
        };
        for (int j = 0; j < steps; ++j) {
            double a = j * h;
            acc += (g(a) + 4.0 * g(a + 0.5 * h) + g(a + h)) * h / 6.0;
        }
        out[i] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// row updates and the schedule

void SieveEngine::update_f_row(BoundTable& t, const BoundTable& snap, int level,
                               const DsParams* ds) const {
    std::vector<double> c(snap.u_count, -1e300);
    cand_lower_descent(snap, level, c);
    cand_lower_half_weight(snap, level, c);
    cand_lower_convex(snap, level, c);
    cand_lower_weight_shift(snap, level, c);
    cand_lower_high_weight(snap, level, c);
    if (ds) {
        DsOps::cand_capped_descent(*this, snap, level, ds->c4, c);
        DsOps::cand_high_weight_capped(*this, snap, level, ds->c4, c);
        if (level == 0) {
            DsOps::cand_zero_row_capped(*this, snap, ds->c4, c);
            DsOps::cand_zero_row_shift_capped(*this, snap, ds->c4, c);
        }
    }
    for (int i = 0; i < t.u_count; ++i)
        if (c[i] > t.wf[level][i]) t.wf[level][i] = c[i];
}

void SieveEngine::update_F_row(BoundTable& t, const BoundTable& snap, int level,
                               const std::vector<ProfiledPass>& passes) const {
    std::vector<double> c(snap.u_count, 1e300);
    cand_upper_descent(snap, level, c);
    cand_upper_weight_shift(snap, level, c);
    cand_upper_profiled(snap, level, passes, c);
    cand_upper_convex(snap, level, c);
    for (int i = 0; i < t.u_count; ++i)
        if (c[i] < t.wF[level][i]) t.wF[level][i] = c[i];
    flat_refresh(t, level);
}

std::vector<double> SieveEngine::run_phase(BoundTable& t, int sweeps, const DsParams* ds) const {
    std::vector<double> deltas;
    if (sweeps <= 0) return deltas;
    std::vector<ProfiledPass> passes = build_profiled_passes(t.grid);
    int total = sweeps;
    const int extension_cap = sweeps + 8;
    for (int s = 0; s < total; ++s) {
        BoundTable start = t;
        for (int l = t.levels_f() - 1; l >= 0; --l) {
            for (int cyc = 0; cyc < cfg_.cycles_per_level; ++cyc) {
                BoundTable snap = t;
                update_f_row(t, snap, l, ds);
                if (l <= t.grid.n) update_F_row(t, snap, l, passes);
            }
            if (l <= t.grid.n) t.check_ordering("sweep");
        }
        double delta = 0.0;
        for (int l = 0; l < t.levels_f(); ++l)
            for (int i = 0; i < t.u_count; ++i) {
                if (l <= t.grid.n)
                    delta = std::max(delta, std::fabs(t.wF[l][i] - start.wF[l][i]));
                delta = std::max(delta, std::fabs(t.wf[l][i] - start.wf[l][i]));
            }
        deltas.push_back(delta);
        t.iteration_index++;
        if (s == total - 1 && delta > cfg_.convergence_eps && total < extension_cap) ++total;
    }
    return deltas;
}

BoundTable SieveEngine::bootstrap_transfer(const BoundTable& base2, double alpha_new) const {
    if (std::fabs(base2.grid.alpha - 2.0) > 1e-12)
        throw std::invalid_argument("bootstrap: base table must have alpha=2");
    BoundTable bt = initial_table(alpha_new);
    const int n = bt.grid.n;
    for (int i = 0; i < bt.u_count; ++i) {
        bt.wF[0][i] = std::min(bt.wF[0][i], base2.wF[0][i]);
        bt.wf[0][i] = std::max(bt.wf[0][i], base2.wf[0][i]);
        double u = bt.u_at(i);
        if (u >= 2.0) {
            double kp = bt.grid.k_top() / std::pow(u, alpha_new - 2.0);
            if (kp <= base2.grid.k_top() + 1e-12)
                bt.wF[n][i] = std::min(bt.wF[n][i], base2.wF_breve(std::min(kp, base2.grid.k_top()), u));
        }
    }
    reseed_rows(bt);
    return bt;
}

void SieveEngine::absorb_zero_row(BoundTable& master, const BoundTable& donor) {
    for (int i = 0; i < master.u_count; ++i) {
        master.wF[0][i] = std::min(master.wF[0][i], donor.wF[0][i]);
        master.wf[0][i] = std::max(master.wf[0][i], donor.wf[0][i]);
    }
}

Part1Result SieveEngine::run_part1() const {
    Part1Result res;
    BoundTable master = initial_table(cfg_.alpha_sequence.front());
    auto d = run_phase(master, cfg_.sweeps_first);
    res.sweep_deltas.insert(res.sweep_deltas.end(), d.begin(), d.end());
    res.phase1 = master;
    for (size_t idx = 1; idx + 1 < cfg_.alpha_sequence.size(); ++idx) {
        BoundTable bt = bootstrap_transfer(master, cfg_.alpha_sequence[idx]);
        d = run_phase(bt, cfg_.sweeps_boot);
        res.sweep_deltas.insert(res.sweep_deltas.end(), d.begin(), d.end());
        absorb_zero_row(master, bt);
        reseed_rows(master);
    }
    d = run_phase(master, cfg_.sweeps_final);
    res.sweep_deltas.insert(res.sweep_deltas.end(), d.begin(), d.end());
    res.final = master;
    return res;
}

}  // namespace xsieve
