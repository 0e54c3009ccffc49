#pragma once

#include <span>
#include <vector>

#include "delaydd/grid.hpp"
#include "delaydd/problem.hpp"
#include "delaydd/trace.hpp"

namespace delaydd {

enum class Side { left, right };

/// Solution values on the full space-time lattice of one grid, history slab
/// included. Row i holds time level t = (i - delay_steps)*dt, so rows
/// 0..delay_steps are the history [-tau, 0] and rows delay_steps+1 .. end are
/// the computed steps over (0, T].
class SpaceTimeField {
public:
    explicit SpaceTimeField(const Grid1D& grid)
        : grid_(grid), values_(static_cast<std::size_t>(rows()) * grid.nx, 0.0) {}

    const Grid1D& grid() const { return grid_; }
    int rows() const { return grid_.delay_steps + 1 + grid_.nt; }

    /// Row index of time level `level` (level 0 = t=0, level nt = t=T).
    int level_row(int level) const { return grid_.delay_steps + level; }
    double time_of_row(int i) const { return (i - grid_.delay_steps) * grid_.dt; }

    double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * grid_.nx + j]; }
    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * grid_.nx + j]; }

    std::span<double> row(int i) {
        return {values_.data() + static_cast<std::size_t>(i) * grid_.nx,
                static_cast<std::size_t>(grid_.nx)};
    }
    std::span<const double> row(int i) const {
        return {values_.data() + static_cast<std::size_t>(i) * grid_.nx,
                static_cast<std::size_t>(grid_.nx)};
    }

    /// Fills rows 0..delay_steps with the sampled history function.
    void load_history(const SpaceTimeFn& history);

    /// Values at one boundary for levels 1..nt.
    InterfaceTrace boundary_values(Side side) const;

    /// Values at an arbitrary node for levels 1..nt.
    InterfaceTrace node_values(int j) const;

private:
    Grid1D grid_;
    std::vector<double> values_;
};

/// One-sided second-order approximation of du/dx at a boundary, for every
/// level in (0, T]: (-3u0 + 4u1 - u2)/(2dx) at the left boundary and its
/// mirror at the right, both oriented as d/dx (not the outward derivative).
InterfaceTrace extract_flux(const SpaceTimeField& field, Side side);

} // namespace delaydd
