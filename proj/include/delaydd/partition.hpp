#pragma once

#include <vector>

#include "delaydd/grid.hpp"

namespace delaydd {

/// Non-overlapping decomposition of a 1D domain into N subdomains with a
/// shared uniform dx/dt lattice. Interface points coincide with grid nodes
/// of both adjacent subdomains and of the global grid.
struct Partition {
    std::vector<double> boundaries;   ///< x_0 < x_1 < ... < x_N
    std::vector<Grid1D> sub_grids;    ///< one per subdomain, shared dt/T/tau
    Grid1D global_grid;               ///< union lattice, used for references
    std::vector<int> interface_nodes; ///< global node index of each interior boundary

    int subdomain_count() const { return static_cast<int>(sub_grids.size()); }
    int interface_count() const { return static_cast<int>(interface_nodes.size()); }

    /// Equal-width split into n subdomains of nx_per_sub nodes each
    /// (interfaces shared, so the global grid has n*(nx_per_sub-1)+1 nodes).
    static Partition equal(double x_min, double x_max, int n, int nx_per_sub, double dt,
                           double t_end, double tau);

    /// Split at explicit boundaries; every subdomain width must be an
    /// integer multiple of dx. Throws NonConforming otherwise.
    static Partition from_boundaries(const std::vector<double>& boundaries, double dx, double dt,
                                     double t_end, double tau);
};

} // namespace delaydd
