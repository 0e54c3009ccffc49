#include "delaydd/partition.hpp"

#include <cmath>
#include <string>

#include "delaydd/errors.hpp"

namespace delaydd {

namespace {

int cells_between(double a, double b, double dx) {
    const double ratio = (b - a) / dx;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
        throw NonConforming("Partition: boundary at " + std::to_string(b) +
                            " does not land on a grid node");
    return static_cast<int>(rounded);
}

} // namespace

Partition Partition::equal(double x_min, double x_max, int n, int nx_per_sub, double dt,
                           double t_end, double tau) {
    if (n < 2)
        throw NonConforming("Partition::equal: need at least 2 subdomains");
    if (nx_per_sub < 3)
        throw NonConforming("Partition::equal: need at least 3 nodes per subdomain");
    const double width = (x_max - x_min) / n;
    const double dx = width / (nx_per_sub - 1);
    std::vector<double> bounds(n + 1);
    for (int i = 0; i <= n; ++i)
        bounds[i] = x_min + i * width;
    bounds[n] = x_max;
    return from_boundaries(bounds, dx, dt, t_end, tau);
}

Partition Partition::from_boundaries(const std::vector<double>& boundaries, double dx, double dt,
                                     double t_end, double tau) {
    if (boundaries.size() < 3)
        throw NonConforming("Partition: need at least one interior boundary");
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (!(boundaries[i] > boundaries[i - 1]))
            throw NonConforming("Partition: boundaries must be strictly increasing");

    Partition p;
    p.boundaries = boundaries;
    const double x_min = boundaries.front();
    int node = 0;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        const int cells = cells_between(boundaries[i], boundaries[i + 1], dx);
        p.sub_grids.push_back(
            build_grid(boundaries[i], boundaries[i + 1], cells + 1, dt, t_end, tau));
        node += cells;
        if (i + 2 < boundaries.size())
            p.interface_nodes.push_back(node);
    }
    const int total_cells = cells_between(x_min, boundaries.back(), dx);
    p.global_grid = build_grid(x_min, boundaries.back(), total_cells + 1, dt, t_end, tau);
    return p;
}

} // namespace delaydd
