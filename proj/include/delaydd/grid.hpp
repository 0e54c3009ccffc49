#pragma once

#include "delaydd/errors.hpp"

namespace delaydd {

/// Uniform space-time lattice for one subdomain (or the whole domain).
///
/// Space: nx nodes on [x_min, x_max] including both boundary points.
/// Time: nt implicit steps over (0, T], plus a history slab of
/// delay_steps+1 stored levels covering [-tau, 0] with tau = delay_steps*dt.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    int nx = 0;
    double dx = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    int nt = 0;
    int delay_steps = 0;

    double x(int j) const { return x_min + j * dx; }
    double tau() const { return delay_steps * dt; }
};

/// Builds a Grid1D, verifying that dt divides both tau and T to 1e-12
/// relative tolerance. Throws NonIntegerDelay / NonIntegerHorizon otherwise.
Grid1D build_grid(double x_min, double x_max, int nx, double dt, double t_end, double tau);

} // namespace delaydd
