#pragma once

#include <vector>

#include "delaydd/field.hpp"
#include "delaydd/grid.hpp"
#include "delaydd/problem.hpp"

namespace delaydd::detail {

/// Boundary closure for one end of an implicit solve.
///
/// dirichlet pins the node to data[level-1]. neumann eliminates a centered
/// ghost node through the interior stencil at the boundary node, with
/// data[level-1] = du/dx there. robin does the same with
/// data[level-1] = (du/dx + p*u) at a right end, (-du/dx + p*u) at a left end.
struct BoundaryRow {
    enum class Kind { dirichlet, neumann, robin };
    Kind kind = Kind::dirichlet;
    const std::vector<double>* data = nullptr;
    double p = 0.0; // robin only
};

/// The implicit time-stepping row of one family on one grid:
///
///   beta * u_j - rho * (u_{j-1} + u_{j+1}) = rhs_j(past levels, forcing)
///
/// parabolic  backward Euler:  rho = nu^2 dt/dx^2,   beta = 1 + a1 dt + 2 rho
/// wave       central in time: rho = c^2 dt^2/dx^2,  beta = 1 + 2 rho
///            (spatial term fully implicit at the new level; u^0 and u^{-1}
///             both come from the history slab)
/// neutral    backward Euler:  rho = mu^2 dt/dx^2,   beta = 1 - r dt + 2 rho
///            (delayed diffusion is explicit; it always reads a past level)
///
/// Delayed terms with level <= 0 read the history slab rows.
class Scheme {
public:
    Scheme(const DelayProblem& problem, const Grid1D& grid);

    double rho() const { return rho_; }
    double beta() const { return beta_; }

    /// RHS of the row at lattice row i, node j. For the neutral family at a
    /// boundary node, the delayed second difference needs the off-grid
    /// neighbour of the delayed level; pass it as delayed_ghost.
    double rhs(const SpaceTimeField& f, int i, int j, double delayed_ghost = 0.0) const;

    /// True when rhs() at a boundary node consumes delayed_ghost.
    bool needs_delayed_ghost() const { return neutral_ != nullptr; }

    /// History-slab ghost values just outside one end of the grid,
    /// sampled from the problem's history function (rows 0..delay_steps).
    std::vector<double> history_ghosts(Side side) const;

private:
    const DelayProblem& problem_;
    const Grid1D& grid_;
    const ParabolicFamily* parabolic_ = nullptr;
    const WaveFamily* wave_ = nullptr;
    const NeutralFamily* neutral_ = nullptr;
    double rho_ = 0.0;
    double beta_ = 0.0;
};

/// Marches the implicit scheme over (0, T] with the given boundary closures.
/// Both data vectors must have length grid.nt.
SpaceTimeField march(const DelayProblem& problem, const Grid1D& grid, const BoundaryRow& left,
                     const BoundaryRow& right);

} // namespace delaydd::detail
