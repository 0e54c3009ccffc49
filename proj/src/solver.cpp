#include "delaydd/solver.hpp"

#include "delaydd/detail/scheme.hpp"
#include "delaydd/errors.hpp"

namespace delaydd {

SpaceTimeField solve_subdomain(const DelayProblem& problem, const Grid1D& grid,
                               const BoundarySpec& left, const BoundarySpec& right) {
    detail::BoundaryRow l, r;
    l.kind = (left.kind == BoundaryKind::dirichlet) ? detail::BoundaryRow::Kind::dirichlet
                                                    : detail::BoundaryRow::Kind::neumann;
    l.data = &left.data.values;
    r.kind = (right.kind == BoundaryKind::dirichlet) ? detail::BoundaryRow::Kind::dirichlet
                                                     : detail::BoundaryRow::Kind::neumann;
    r.data = &right.data.values;
    return detail::march(problem, grid, l, r);
}

InterfaceTrace interface_flux(const DelayProblem& problem, const SpaceTimeField& field,
                              Side side) {
    const Grid1D& g = field.grid();
    detail::Scheme scheme(problem, g);
    const double rho = scheme.rho();
    const double beta = scheme.beta();
    const int m = g.delay_steps;
    const int last = g.nx - 1;

    // The past-level ghost feeds the neutral family's delayed diffusion at
    // the boundary node; it is defined by this same flux at earlier levels
    // and by the history function before t=0.
    std::vector<double> ghosts;
    if (scheme.needs_delayed_ghost())
        ghosts = scheme.history_ghosts(side);

    InterfaceTrace tr = InterfaceTrace::zeros(g.nt, g.dt);
    for (int level = 1; level <= g.nt; ++level) {
        const int i = field.level_row(level);
        const double past_ghost = scheme.needs_delayed_ghost() ? ghosts[i - m] : 0.0;
        double ghost, flux;
        if (side == Side::right) {
            const double r = scheme.rhs(field, i, last, past_ghost);
            ghost = (beta * field.at(i, last) - rho * field.at(i, last - 1) - r) / rho;
            flux = (ghost - field.at(i, last - 1)) / (2.0 * g.dx);
        } else {
            const double r = scheme.rhs(field, i, 0, past_ghost);
            ghost = (beta * field.at(i, 0) - rho * field.at(i, 1) - r) / rho;
            flux = (field.at(i, 1) - ghost) / (2.0 * g.dx);
        }
        tr.values[level - 1] = flux;
        if (scheme.needs_delayed_ghost())
            ghosts[i] = ghost;
    }
    return tr;
}

} // namespace delaydd
