#include "xsieve/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace xsieve {

namespace {

double eval_checked(const std::function<double(double)>& f, double x) {
    double y = f(x);
    if (!std::isfinite(y)) throw std::domain_error("singular integrand");
    return y;
}

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth, int max_depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = eval_checked(f, lm), frm = eval_checked(f, rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || (b - a) < 1e-14)
        return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw IntegrationError("integration depth exhausted", left + right + delta / 15.0);
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadratureConfig cfg) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = eval_checked(f, a), fm = eval_checked(f, m), fb = eval_checked(f, b);
    double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, cfg.abs_tol, 0, cfg.max_depth);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("find_root: no bracket");
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

double power_log_ratio_integral(double alpha, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) throw std::domain_error("power_log_ratio_integral: pole at x=1");
    double r = std::round(alpha);
    if (std::fabs(alpha - r) < 1e-12 && r >= 1.0 && r < 40.0) {
        // integer alpha: -log(1-x) - sum_{j<alpha} x^j / j
        double s = -std::log1p(-x);
        double xp = 1.0;
        for (int j = 1; j < static_cast<int>(r); ++j) {
            xp *= x;
            s -= xp / j;
        }
        return s;
    }
    // series: sum_{j>=0} x^(alpha+j) / (alpha+j)
    double s = 0.0;
    double xp = std::pow(x, alpha);
    for (int j = 0; j < 100000; ++j) {
        double term = xp / (alpha + j);
        s += term;
        if (term < 1e-17 * std::max(1.0, s)) break;
        xp *= x;
    }
    return s;
}

CumulativeIntegral::CumulativeIntegral(const std::function<double(double)>& f,
                                       double lo, double hi, double step,
                                       const std::vector<double>& extra_nodes) {
    if (!(hi > lo)) return;
    int count = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
    nodes_.reserve(count + extra_nodes.size());
    for (int i = 0; i < count; ++i) nodes_.push_back(lo + i * step);
    nodes_.back() = std::min(nodes_.back(), hi);
    if (nodes_.back() < hi) nodes_.push_back(hi);
    for (double x : extra_nodes)
        if (x > lo && x < hi) nodes_.push_back(x);
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end(),
                             [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
                 nodes_.end());
    prefix_.resize(nodes_.size(), 0.0);
    double prev = eval_checked(f, nodes_[0]);
    for (size_t i = 1; i < nodes_.size(); ++i) {
        double cur = eval_checked(f, nodes_[i]);
        prefix_[i] = prefix_[i - 1] + 0.5 * (prev + cur) * (nodes_[i] - nodes_[i - 1]);
        prev = cur;
    }
}

CumulativeIntegral CumulativeIntegral::from_samples(std::vector<double> nodes,
                                                    const std::vector<double>& values) {
    CumulativeIntegral c;
    c.nodes_ = std::move(nodes);
    c.prefix_.resize(c.nodes_.size(), 0.0);
    for (size_t i = 1; i < c.nodes_.size(); ++i)
        c.prefix_[i] = c.prefix_[i - 1] +
                       0.5 * (values[i - 1] + values[i]) * (c.nodes_[i] - c.nodes_[i - 1]);
    return c;
}

double CumulativeIntegral::prefix_at(double x) const {
    if (x <= nodes_.front()) return prefix_.front();
    if (x >= nodes_.back()) return prefix_.back();
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    size_t i = static_cast<size_t>(it - nodes_.begin());
    double t = (x - nodes_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
    return prefix_[i - 1] + t * (prefix_[i] - prefix_[i - 1]);
}

double CumulativeIntegral::between(double a, double b) const {
    if (empty() || b <= a) return 0.0;
    return prefix_at(b) - prefix_at(a);
}

}  // namespace xsieve
