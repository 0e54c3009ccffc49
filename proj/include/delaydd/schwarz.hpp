#pragma once

#include <utility>

#include "delaydd/problem.hpp"
#include "delaydd/trace.hpp"
#include "delaydd/waveform.hpp"

namespace delaydd {

/// Settings for the Schwarz waveform-relaxation baselines.
struct SchwarzConfig {
    int overlap_cells = 2;   ///< overlap width in cells (even; 0 allowed for Robin)
    double robin_p = 0.0;    ///< Robin parameter, optimized variant only
    double tol = 1e-6;
    int max_iters = 200;
    Norm norm = Norm::sup;
};

/// Classical (alternating-Dirichlet) Schwarz waveform relaxation on two
/// overlapping subdomains split at `split`, with Jacobi ordering. Parabolic
/// family only; used for the error-equation comparison runs, so the history
/// records the interface trace magnitudes.
///
/// guesses = initial Dirichlet data (left subdomain's right boundary, right
/// subdomain's left boundary).
ConvergenceHistory classical_schwarz_run(const DelayProblem& problem, double split,
                                         const SchwarzConfig& cfg,
                                         const std::pair<InterfaceTrace, InterfaceTrace>& guesses,
                                         double dx);

/// Optimized Schwarz with Robin transmission (du/dx + p u on the left
/// subdomain's right boundary, -du/dx + p u on the right subdomain's left
/// boundary), exchanged as a single combined trace. Same Jacobi ordering and
/// error measure as the classical variant.
ConvergenceHistory optimized_schwarz_run(const DelayProblem& problem, double split,
                                         const SchwarzConfig& cfg,
                                         const std::pair<InterfaceTrace, InterfaceTrace>& guesses,
                                         double dx);

} // namespace delaydd
