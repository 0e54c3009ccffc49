#include "delaydd/detail/scheme.hpp"

#include <cmath>
#include <string>

#include "delaydd/errors.hpp"
#include "delaydd/tridiag.hpp"

namespace delaydd::detail {

Scheme::Scheme(const DelayProblem& problem, const Grid1D& grid)
    : problem_(problem), grid_(grid) {
    const double dt = grid.dt;
    const double dx2 = grid.dx * grid.dx;
    if ((parabolic_ = std::get_if<ParabolicFamily>(&problem.family))) {
        rho_ = parabolic_->nu * parabolic_->nu * dt / dx2;
        beta_ = 1.0 + parabolic_->a1 * dt + 2.0 * rho_;
    } else if ((wave_ = std::get_if<WaveFamily>(&problem.family))) {
        rho_ = wave_->c * wave_->c * dt * dt / dx2;
        beta_ = 1.0 + 2.0 * rho_;
    } else {
        neutral_ = std::get_if<NeutralFamily>(&problem.family);
        rho_ = neutral_->mu * neutral_->mu * dt / dx2;
        beta_ = 1.0 - neutral_->r * dt + 2.0 * rho_;
    }
}

double Scheme::rhs(const SpaceTimeField& f, int i, int j, double delayed_ghost) const {
    const int m = grid_.delay_steps;
    const double dt = grid_.dt;
    const double t = f.time_of_row(i);
    const double x = grid_.x(j);
    if (parabolic_) {
        return f.at(i - 1, j) - parabolic_->a2 * dt * f.at(i - m, j) +
               dt * problem_.forcing(x, t);
    }
    if (wave_) {
        return 2.0 * f.at(i - 1, j) - f.at(i - 2, j) +
               wave_->lambda * dt * dt * f.at(i - m, j) + dt * dt * problem_.forcing(x, t);
    }
    // neutral: delayed diffusion read from the past level
    const double uml = (j > 0) ? f.at(i - m, j - 1) : delayed_ghost;
    const double umr = (j < grid_.nx - 1) ? f.at(i - m, j + 1) : delayed_ghost;
    const double dxx = (uml - 2.0 * f.at(i - m, j) + umr) / (grid_.dx * grid_.dx);
    return f.at(i - 1, j) + dt * neutral_->mu * neutral_->mu * neutral_->c * neutral_->c * dxx +
           neutral_->d * dt * f.at(i - m, j) + dt * problem_.forcing(x, t);
}

std::vector<double> Scheme::history_ghosts(Side side) const {
    const double xg = (side == Side::left) ? grid_.x_min - grid_.dx : grid_.x_max + grid_.dx;
    std::vector<double> g(static_cast<std::size_t>(grid_.delay_steps + 1 + grid_.nt), 0.0);
    for (int i = 0; i <= grid_.delay_steps; ++i)
        g[i] = problem_.history(xg, (i - grid_.delay_steps) * grid_.dt);
    return g;
}

namespace {

void check_boundary(const BoundaryRow& b, int nt, const char* which) {
    if (b.data == nullptr || static_cast<int>(b.data->size()) != nt)
        throw LengthMismatch(std::string("march: ") + which +
                             " boundary data length differs from nt");
}

} // namespace

SpaceTimeField march(const DelayProblem& problem, const Grid1D& grid, const BoundaryRow& left,
                     const BoundaryRow& right) {
    problem.validate();
    if (std::abs(grid.tau() - problem.tau) > 1e-12 * problem.tau)
        throw NonConforming("march: grid delay_steps*dt does not match problem tau");
    if (grid.x_min < problem.x_min - 1e-9 || grid.x_max > problem.x_max + 1e-9)
        throw NonConforming("march: grid exceeds the problem domain");
    check_boundary(left, grid.nt, "left");
    check_boundary(right, grid.nt, "right");

    Scheme scheme(problem, grid);
    const double rho = scheme.rho();
    const double beta = scheme.beta();
    const double dx = grid.dx;
    const int nx = grid.nx;
    const int last = nx - 1;

    SpaceTimeField f(grid);
    f.load_history(problem.history);

    // Ghost-value columns just outside each end, maintained when the neutral
    // family's delayed diffusion has to be evaluated at a boundary node.
    std::vector<double> ghost_left, ghost_right;
    const bool track_left = scheme.needs_delayed_ghost() && left.kind != BoundaryRow::Kind::dirichlet;
    const bool track_right =
        scheme.needs_delayed_ghost() && right.kind != BoundaryRow::Kind::dirichlet;
    if (track_left)
        ghost_left = scheme.history_ghosts(Side::left);
    if (track_right)
        ghost_right = scheme.history_ghosts(Side::right);

    std::vector<double> sub(nx - 1), diag(nx), sup(nx - 1), rhs(nx);
    for (int level = 1; level <= grid.nt; ++level) {
        const int i = f.level_row(level);
        for (int j = 1; j < last; ++j) {
            sub[j - 1] = -rho;
            sup[j] = -rho;
            diag[j] = beta;
            rhs[j] = scheme.rhs(f, i, j);
        }

        const double dl = (*left.data)[level - 1];
        switch (left.kind) {
        case BoundaryRow::Kind::dirichlet:
            diag[0] = 1.0;
            sup[0] = 0.0;
            rhs[0] = dl;
            break;
        case BoundaryRow::Kind::neumann:
            // ghost u_{-1} = u_1 - 2 dx * flux
            diag[0] = beta;
            sup[0] = -2.0 * rho;
            rhs[0] = scheme.rhs(f, i, 0, track_left ? ghost_left[i - grid.delay_steps] : 0.0) -
                     2.0 * rho * dx * dl;
            break;
        case BoundaryRow::Kind::robin:
            // data = -du/dx + p u, so du/dx = p u_0 - data
            diag[0] = beta + 2.0 * rho * dx * left.p;
            sup[0] = -2.0 * rho;
            rhs[0] = scheme.rhs(f, i, 0, track_left ? ghost_left[i - grid.delay_steps] : 0.0) +
                     2.0 * rho * dx * dl;
            break;
        }

        const double dr = (*right.data)[level - 1];
        switch (right.kind) {
        case BoundaryRow::Kind::dirichlet:
            diag[last] = 1.0;
            sub[last - 1] = 0.0;
            rhs[last] = dr;
            break;
        case BoundaryRow::Kind::neumann:
            // ghost u_{nx} = u_{nx-2} + 2 dx * flux
            diag[last] = beta;
            sub[last - 1] = -2.0 * rho;
            rhs[last] = scheme.rhs(f, i, last, track_right ? ghost_right[i - grid.delay_steps] : 0.0) +
                        2.0 * rho * dx * dr;
            break;
        case BoundaryRow::Kind::robin:
            // data = du/dx + p u, so du/dx = data - p u_M
            diag[last] = beta + 2.0 * rho * dx * right.p;
            sub[last - 1] = -2.0 * rho;
            rhs[last] = scheme.rhs(f, i, last, track_right ? ghost_right[i - grid.delay_steps] : 0.0) +
                        2.0 * rho * dx * dr;
            break;
        }

        const std::vector<double> u = thomas_solve(sub, diag, sup, rhs);
        for (int j = 0; j < nx; ++j)
            f.at(i, j) = u[j];

        if (track_left) {
            const double q = (left.kind == BoundaryRow::Kind::neumann) ? dl : left.p * u[0] - dl;
            ghost_left[i] = u[1] - 2.0 * dx * q;
        }
        if (track_right) {
            const double q = (right.kind == BoundaryRow::Kind::neumann) ? dr : dr - right.p * u[last];
            ghost_right[i] = u[last - 1] + 2.0 * dx * q;
        }
    }
    return f;
}

} // namespace delaydd::detail
