#include "xsieve/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xsieve/numerics.hpp"

namespace xsieve {

double DelayOdeTable::at(double u) const {
    if (values.empty()) throw std::logic_error("empty delay table");
    if (u <= u_min) return values.front();
    if (u >= u_max) return values.back();
    double pos = (u - u_min) / step;
    size_t i = static_cast<size_t>(pos);
    if (i + 1 >= values.size()) return values.back();
    double t = pos - static_cast<double>(i);
    return values[i] + t * (values[i + 1] - values[i]);
}

namespace {

double h_closed(double u) {
    if (u < 0.0) throw std::domain_error("buchstab_h: u < 0");
    if (u <= 1.0) return u;
    return 2.0 * u - u * std::log(u) - 1.0;  // valid on (1,2]
}

double w_closed(double u) {
    if (u < 1.0) throw std::domain_error("buchstab_w: u < 1");
    return 1.0 / u;  // valid on [1,2]
}

double phi_closed(double u) {
    // e^-gamma u F(u): constant 2 on (0,3] (F extends as 2 e^gamma / u below 1).
    if (u <= 0.0) throw std::domain_error("jr_F: u <= 0");
    return 2.0;
}

double psi_closed(double u) {
    // e^-gamma u f(u): 0 below 2, 2 ln(u-1) on [2,4].
    if (u <= 0.0) throw std::domain_error("jr_f: u <= 0");
    if (u < 2.0) return 0.0;
    return 2.0 * std::log(u - 1.0);
}

}  // namespace

ClassicalFunctions::ClassicalFunctions(double step, double u_max)
    : step_(step), u_max_(u_max) {
    // March h(u)/u from u=2:  (h/u)(u) = h(2)/2 - int_2^u h(t-1)/t^2 dt.
    {
        h_.u_min = 2.0;
        h_.u_max = u_max;
        h_.step = step;
        size_t count = static_cast<size_t>(std::ceil((u_max - 2.0) / step)) + 1;
        h_.values.resize(count);
        h_.values[0] = h_closed(2.0) / 2.0;
        auto h_at = [&](double t) {
            return t <= 2.0 ? h_closed(t) : h_.values[static_cast<size_t>((t - 2.0) / step + 0.5)] * t;
        };
        double prev = h_closed(1.0) / 4.0;  // integrand h(t-1)/t^2 at t=2
        for (size_t i = 1; i < count; ++i) {
            double t = 2.0 + i * step;
            double cur = h_at(t - 1.0) / (t * t);
            h_.values[i] = h_.values[i - 1] - 0.5 * (prev + cur) * step;
            prev = cur;
        }
    }
    // March u w(u) from u=2:  (u w)(u) = 1 + int_2^u w(t-1) dt.
    {
        w_.u_min = 2.0;
        w_.u_max = u_max;
        w_.step = step;
        size_t count = static_cast<size_t>(std::ceil((u_max - 2.0) / step)) + 1;
        w_.values.resize(count);
        w_.values[0] = 1.0;
        auto w_at = [&](double t) {
            return t <= 2.0 ? w_closed(t) : w_.values[static_cast<size_t>((t - 2.0) / step + 0.5)] / t;
        };
        double prev = w_closed(1.0);
        for (size_t i = 1; i < count; ++i) {
            double t = 2.0 + i * step;
            double cur = w_at(t - 1.0);
            w_.values[i] = w_.values[i - 1] + 0.5 * (prev + cur) * step;
            prev = cur;
        }
    }
    // March the weighted pair phi = e^-g u F and psi = e^-g u f jointly:
    //   phi'(u) = psi(u-1)/(u-1),  psi'(u) = phi(u-1)/(u-1),
    // with closed forms up to 3 (phi) and 4 (psi).
    {
        phi_.u_min = 3.0;
        phi_.u_max = u_max;
        phi_.step = step;
        psi_.u_min = 4.0;
        psi_.u_max = u_max;
        psi_.step = step;
        size_t pc = static_cast<size_t>(std::ceil((u_max - 3.0) / step)) + 1;
        size_t qc = static_cast<size_t>(std::ceil((u_max - 4.0) / step)) + 1;
        phi_.values.resize(pc);
        psi_.values.resize(qc);
        phi_.values[0] = phi_closed(3.0);
        psi_.values[0] = psi_closed(4.0);
        auto phi_at = [&](double t) {
            return t <= 3.0 ? phi_closed(t) : phi_.values[static_cast<size_t>((t - 3.0) / step + 0.5)];
        };
        auto psi_at = [&](double t) {
            return t <= 4.0 ? psi_closed(t) : psi_.values[static_cast<size_t>((t - 4.0) / step + 0.5)];
        };
        // march both together: each rate only looks one full delay back, so
        // filling node i of both series per step keeps the history available
        double prev_phi_rate = psi_closed(2.0) / 2.0;
        double prev_psi_rate = phi_closed(3.0) / 3.0;
        for (size_t i = 1; i < std::max(pc, qc); ++i) {
            if (i < pc) {
                double t = 3.0 + i * step;
                double cur = psi_at(t - 1.0) / (t - 1.0);
                phi_.values[i] = phi_.values[i - 1] + 0.5 * (prev_phi_rate + cur) * step;
                prev_phi_rate = cur;
            }
            if (i < qc) {
                double t = 4.0 + i * step;
                double cur = phi_at(t - 1.0) / (t - 1.0);
                psi_.values[i] = psi_.values[i - 1] + 0.5 * (prev_psi_rate + cur) * step;
                prev_psi_rate = cur;
            }
        }
        // the pair meets at the noise level far out; keep the analytic order
        for (size_t i = 0; i < qc; ++i) {
            double u = 4.0 + i * step;
            size_t pi = static_cast<size_t>((u - 3.0) / step + 0.5);
            if (pi < pc && psi_.values[i] > phi_.values[pi])
                psi_.values[i] = phi_.values[pi];
        }
    }
}

double ClassicalFunctions::buchstab_h(double u) const {
    if (u < 0.0) throw std::domain_error("buchstab_h: u < 0");
    if (u <= 2.0) return h_closed(u);
    return h_.at(u) * u;
}

double ClassicalFunctions::buchstab_w(double u) const {
    if (u < 1.0) throw std::domain_error("buchstab_w: u < 1");
    if (u <= 2.0) return w_closed(u);
    return w_.at(u) / u;
}

double ClassicalFunctions::weighted_F(double u) const {
    if (u <= 0.0) throw std::domain_error("jr_F: u <= 0");
    if (u <= 3.0) return phi_closed(u);
    return phi_.at(u);
}

double ClassicalFunctions::weighted_f(double u) const {
    if (u <= 0.0) throw std::domain_error("jr_f: u <= 0");
    if (u <= 4.0) return psi_closed(u);
    return psi_.at(u);
}

double ClassicalFunctions::jr_F(double u) const {
    return Constants::exp_gamma() * weighted_F(u) / u;
}

double ClassicalFunctions::jr_f(double u) const {
    return Constants::exp_gamma() * weighted_f(u) / u;
}

double ClassicalFunctions::tilde_F(double u) const {
    if (u < 2.0 || u > 4.0) throw std::domain_error("tilde_F: u outside [2,4]");
    double x = 1.0 - 2.0 / u;
    double bracket = x - 0.5 * x * x - x * x * x / 6.0;
    return Constants::exp_gamma() *
           (4.0 * buchstab_h(u / 2.0) / (u * u) +
            (2.0 + std::log(u / 2.0)) * (2.0 / u) * bracket);
}

}  // namespace xsieve
