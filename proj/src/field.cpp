#include "delaydd/field.hpp"

namespace delaydd {

void SpaceTimeField::load_history(const SpaceTimeFn& history) {
    for (int i = 0; i <= grid_.delay_steps; ++i) {
        const double t = time_of_row(i);
        for (int j = 0; j < grid_.nx; ++j)
            at(i, j) = history(grid_.x(j), t);
    }
}

InterfaceTrace SpaceTimeField::boundary_values(Side side) const {
    return node_values(side == Side::left ? 0 : grid_.nx - 1);
}

InterfaceTrace SpaceTimeField::node_values(int j) const {
    InterfaceTrace tr = InterfaceTrace::zeros(grid_.nt, grid_.dt);
    for (int level = 1; level <= grid_.nt; ++level)
        tr.values[level - 1] = at(level_row(level), j);
    return tr;
}

InterfaceTrace extract_flux(const SpaceTimeField& field, Side side) {
    const Grid1D& g = field.grid();
    InterfaceTrace tr = InterfaceTrace::zeros(g.nt, g.dt);
    const double w = 1.0 / (2.0 * g.dx);
    for (int level = 1; level <= g.nt; ++level) {
        const int i = field.level_row(level);
        if (side == Side::left) {
            tr.values[level - 1] =
                w * (-3.0 * field.at(i, 0) + 4.0 * field.at(i, 1) - field.at(i, 2));
        } else {
            const int n = g.nx - 1;
            tr.values[level - 1] =
                w * (3.0 * field.at(i, n) - 4.0 * field.at(i, n - 1) + field.at(i, n - 2));
        }
    }
    return tr;
}

} // namespace delaydd
