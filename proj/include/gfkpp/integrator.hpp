#pragma once

#include <algorithm>
#include <cmath>

namespace gfkpp::ode {

/// Error-control settings for the embedded 5(4) pair.
struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-12;
};

struct StepResult {
    double y = 0.0;      ///< fifth-order solution at x + h
    double error = 0.0;  ///< scaled error norm; the step is acceptable when <= 1
    double slope_end = 0.0;
    bool finite = true;
};

/// One Dormand-Prince step for the scalar equation dy/dx = rhs(x, y).
template <class Rhs>
StepResult dopri5_step(const Rhs& rhs, double x, double y, double h, double slope_start, Tolerance tol) {
    constexpr double a21 = 1.0 / 5.0;
    constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                     a54 = -212.0 / 729.0;
    constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                     a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                     b6 = 11.0 / 84.0;
    constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                     e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    const double k1 = slope_start;
    const double k2 = rhs(x + h / 5.0, y + h * a21 * k1);
    const double k3 = rhs(x + 3.0 * h / 10.0, y + h * (a31 * k1 + a32 * k2));
    const double k4 = rhs(x + 4.0 * h / 5.0, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = rhs(x + 8.0 * h / 9.0, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = rhs(x + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = rhs(x + h, y5);
    const double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    StepResult r;
    r.y = y5;
    r.slope_end = k7;
    r.finite = std::isfinite(y5) && std::isfinite(err) && std::isfinite(k7);
    const double scale = tol.abs + tol.rel * std::max(std::abs(y), std::abs(y5));
    r.error = r.finite ? std::abs(err) / scale : INFINITY;
    return r;
}

/// Standard step-size update for a fifth-order method.
inline double next_step_factor(double error) {
    if (error == 0.0) return 5.0;
    return std::clamp(0.9 * std::pow(error, -0.2), 0.2, 5.0);
}

}  // namespace gfkpp::ode
