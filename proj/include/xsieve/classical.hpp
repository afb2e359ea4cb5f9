// Classical companions of the linear sieve: the Buchstab-type functions h(u)
// and w(u), the upper/lower bound pair F(u), f(u) defined by a coupled delay
// ODE system, and the Selberg-derived upper bound tilde_F(u) on [2,4].
//
// The delay ODEs are solved in integral form, marching in panels of width one
// (the delay) over already-computed history on a fixed fine grid. Closed forms
// are returned exactly inside their validity ranges.
#pragma once

#include <vector>

namespace xsieve {

// Sampled solution values of a delay ODE on [u_min, u_max] with uniform step.
struct DelayOdeTable {
    double u_min = 0.0;
    double u_max = 0.0;
    double step = 0.0;
    std::vector<double> values;

    double at(double u) const;  // linear interpolation, clamped to the range
};

class ClassicalFunctions {
public:
    explicit ClassicalFunctions(double step = 1.0 / 4096.0, double u_max = 24.0);

    // h(u) = u on [0,1]; 2u - u ln u - 1 on (1,2]; integral form beyond.
    double buchstab_h(double u) const;

    // w(u) = 1/u on [1,2]; (u w(u))' = w(u-1) beyond.
    double buchstab_w(double u) const;

    // Upper/lower sieve bound functions F, f.
    double jr_F(double u) const;
    double jr_f(double u) const;

    // The normalized forms the bound tables are built from:
    //   weighted_F(u) = e^-gamma * u * F(u)  (== 2 on (0,3])
    //   weighted_f(u) = e^-gamma * u * f(u)  (== 2 ln(u-1) on [2,4], 0 below 2)
    double weighted_F(double u) const;
    double weighted_f(double u) const;

    // Selberg-derived upper bound on [2,4], evaluated from buchstab_h.
    double tilde_F(double u) const;

    double step() const { return step_; }
    double u_max() const { return u_max_; }

private:
    double step_;
    double u_max_;
    DelayOdeTable h_;    // stores h(u)/u for u >= 2
    DelayOdeTable w_;    // stores u*w(u) for u >= 2
    DelayOdeTable phi_;  // e^-gamma u F(u) for u >= 3
    DelayOdeTable psi_;  // e^-gamma u f(u) for u >= 4
};

}  // namespace xsieve
