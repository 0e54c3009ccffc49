#include "delaydd/grid.hpp"

#include <cmath>
#include <string>

namespace delaydd {

namespace {

// Checks that `whole/part` is an integer to 1e-12 relative tolerance and
// returns it rounded.
int integer_ratio(double whole, double part, bool* ok) {
    const double ratio = whole / part;
    const double rounded = std::round(ratio);
    *ok = rounded >= 1.0 && std::abs(ratio - rounded) <= 1e-12 * ratio;
    return static_cast<int>(rounded);
}

} // namespace

Grid1D build_grid(double x_min, double x_max, int nx, double dt, double t_end, double tau) {
    if (nx < 3)
        throw NonConforming("build_grid: nx must be >= 3, got " + std::to_string(nx));
    if (!(x_max > x_min))
        throw NonConforming("build_grid: x_max must exceed x_min");
    if (!(dt > 0.0) || !(t_end > 0.0) || !(tau > 0.0))
        throw NonConforming("build_grid: dt, T and tau must be positive");

    bool ok = false;
    const int m = integer_ratio(tau, dt, &ok);
    if (!ok)
        throw NonIntegerDelay("build_grid: tau/dt = " + std::to_string(tau / dt) +
                              " is not an integer");
    const int nt = integer_ratio(t_end, dt, &ok);
    if (!ok)
        throw NonIntegerHorizon("build_grid: T/dt = " + std::to_string(t_end / dt) +
                                " is not an integer");

    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.nx = nx;
    g.dx = (x_max - x_min) / (nx - 1);
    g.t_end = t_end;
    g.dt = dt;
    g.nt = nt;
    g.delay_steps = m;
    return g;
}

} // namespace delaydd
