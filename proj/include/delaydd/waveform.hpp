#pragma once

#include <vector>

#include "delaydd/partition.hpp"
#include "delaydd/problem.hpp"
#include "delaydd/solver.hpp"
#include "delaydd/trace.hpp"

namespace delaydd {

/// Waveform-relaxation settings. DNWR takes theta in (0,1), NNWR in (0,1/2);
/// the runners warn on stderr outside these ranges but still iterate.
struct WrConfig {
    double theta = 0.5;
    double tol = 1e-6;     ///< relative interface error target
    int max_iters = 100;
    Norm norm = Norm::sup;
};

/// Per-iteration interface error norms plus outcome. error_norms has
/// iterations_run + 1 entries (k=0 is the initial guess). Errors are
/// measured against the monolithic solution's interface traces, which are
/// identically zero in error-equation mode.
struct ConvergenceHistory {
    std::vector<double> error_norms;
    int iterations_run = 0;
    bool converged = false;
    std::vector<InterfaceTrace> final_traces;
};

/// Dirichlet-Neumann waveform relaxation on a two-subdomain partition.
///
/// Per iteration: a Dirichlet solve on the left subdomain with the current
/// interface trace, a Neumann solve on the right subdomain driven by the
/// interface flux of the left solution, then the relaxation update
/// h^k = theta * (right solution at the interface) + (1-theta) * h^{k-1}.
ConvergenceHistory dnwr_run(const DelayProblem& problem, const Partition& partition,
                            const InterfaceTrace& h0, const WrConfig& cfg);

/// DNWR on N >= 2 subdomains. The middle subdomain (index ceil(N/2),
/// 1-based) solves a pure Dirichlet problem first; solutions then propagate
/// outward, each subdomain taking Neumann data on its inner interface and
/// the current Dirichlet trace on its outer one. The two sweeps are
/// independent. With N = 2 this is exactly dnwr_run.
ConvergenceHistory dnwr_multi_run(const DelayProblem& problem, const Partition& partition,
                                  const std::vector<InterfaceTrace>& traces,
                                  const WrConfig& cfg);

/// Neumann-Neumann waveform relaxation on N >= 2 subdomains.
///
/// Per iteration: independent Dirichlet solves on all subdomains with the
/// current traces, independent Neumann correction solves driven by the
/// interface flux jumps (zero Dirichlet at the physical ends), then
/// g^k = g^{k-1} - theta * (sum of the two correction traces) per interface.
ConvergenceHistory nnwr_run(const DelayProblem& problem, const Partition& partition,
                            const std::vector<InterfaceTrace>& g0, const WrConfig& cfg);

/// Samples a scalar function of time at t = dt, ..., nt*dt.
InterfaceTrace sample_time_function(const TimeFn& fn, int nt, double dt);

} // namespace delaydd
