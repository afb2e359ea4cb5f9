// Quadrature, root finding and shared constants used by the sieve engine.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsieve {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_depth = 60;
};

struct Constants {
    static constexpr double euler_gamma = 0.5772156649015328606065120900824024;
    static double exp_gamma() { return std::exp(euler_gamma); }
    static double exp_neg_gamma() { return std::exp(-euler_gamma); }
};

// Thrown when adaptive refinement runs out of depth; carries the best value seen.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Adaptive Simpson integration of f over [a, b] to cfg.abs_tol.
// The integrand must be finite on the open interval; callers split at known
// kink points before integrating.
double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadratureConfig cfg = {});

// Bisection on [lo, hi]; requires a sign change. Deterministic.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

// \int_0^x t^(alpha-1)/(1-t) dt for 0 <= x < 1.
double power_log_ratio_integral(double alpha, double x);

// Prefix integral of an integrand sampled on a fixed fine grid (trapezoid).
// between(a, b) evaluates the integral over [a, b] with linear interpolation
// of the prefix sums inside cells. Used by the table operators so that one
// integrand pass serves every left endpoint u at once.
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(const std::function<double(double)>& f, double lo, double hi,
                       double step, const std::vector<double>& extra_nodes = {});
    static CumulativeIntegral from_samples(std::vector<double> nodes,
                                           const std::vector<double>& values);
    double between(double a, double b) const;
    bool empty() const { return nodes_.size() < 2; }
    double lo() const { return nodes_.empty() ? 0.0 : nodes_.front(); }
    double hi() const { return nodes_.empty() ? 0.0 : nodes_.back(); }

private:
    double prefix_at(double x) const;
    std::vector<double> nodes_;
    std::vector<double> prefix_;
};

}  // namespace xsieve
