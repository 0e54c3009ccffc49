#pragma once

#include "delaydd/field.hpp"
#include "delaydd/grid.hpp"
#include "delaydd/problem.hpp"
#include "delaydd/trace.hpp"

namespace delaydd {

enum class BoundaryKind { dirichlet, neumann };

/// Boundary data for one end of a subdomain solve. Dirichlet stores the
/// value trace; Neumann stores the du/dx trace at the boundary point (not
/// the outward normal derivative).
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::dirichlet;
    InterfaceTrace data;

    static BoundarySpec dirichlet(InterfaceTrace trace) {
        return {BoundaryKind::dirichlet, std::move(trace)};
    }
    static BoundarySpec neumann(InterfaceTrace trace) {
        return {BoundaryKind::neumann, std::move(trace)};
    }
};

/// Solves one subdomain (or the whole domain) over the full time window.
///
/// Backward Euler for the parabolic and neutral families, central time
/// differencing with an implicit spatial term for the wave family; standard
/// 3-point second difference in space. Dirichlet rows pin the boundary
/// value; Neumann rows use a second-order ghost-point closure. Throws
/// NonConforming if the grid's delay step count disagrees with the problem's
/// tau or the grid leaves the problem domain.
SpaceTimeField solve_subdomain(const DelayProblem& problem, const Grid1D& grid,
                               const BoundarySpec& left, const BoundarySpec& right);

/// Scheme-consistent flux of a computed field at one boundary: per time
/// level, the du/dx value whose centered ghost closure makes the interior
/// stencil row hold at the boundary node.
///
/// This functional is exactly dual to the ghost-point Neumann closure: a
/// Neumann solve fed this trace reproduces the field it was extracted from,
/// and across an interface it reproduces the monolithic stencil. The
/// waveform iterations transmit this flux; extract_flux() is the plain
/// geometric one-sided difference.
InterfaceTrace interface_flux(const DelayProblem& problem, const SpaceTimeField& field,
                              Side side);

} // namespace delaydd
