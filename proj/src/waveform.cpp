#include "delaydd/waveform.hpp"

#include <iostream>
#include <string>

#include "delaydd/errors.hpp"

namespace delaydd {

InterfaceTrace sample_time_function(const TimeFn& fn, int nt, double dt) {
    InterfaceTrace tr = InterfaceTrace::zeros(nt, dt);
    for (int k = 1; k <= nt; ++k)
        tr.values[k - 1] = fn(k * dt);
    return tr;
}

namespace {

void check_traces(const Partition& part, const std::vector<InterfaceTrace>& traces) {
    if (static_cast<int>(traces.size()) != part.interface_count())
        throw LengthMismatch("waveform: expected one trace per interface");
    const int nt = part.global_grid.nt;
    for (const auto& tr : traces)
        if (static_cast<int>(tr.size()) != nt)
            throw LengthMismatch("waveform: trace length differs from nt");
}

// Monolithic interface traces; the convergence target. Exactly zero in
// error-equation mode.
std::vector<InterfaceTrace> reference_traces(const DelayProblem& problem,
                                             const Partition& part) {
    const Grid1D& g = part.global_grid;
    const SpaceTimeField mono = solve_subdomain(
        problem, g,
        BoundarySpec::dirichlet(sample_time_function(problem.boundary_left, g.nt, g.dt)),
        BoundarySpec::dirichlet(sample_time_function(problem.boundary_right, g.nt, g.dt)));
    std::vector<InterfaceTrace> refs;
    refs.reserve(part.interface_nodes.size());
    for (int node : part.interface_nodes)
        refs.push_back(mono.node_values(node));
    return refs;
}

double aggregate_error(const std::vector<InterfaceTrace>& traces,
                       const std::vector<InterfaceTrace>& refs, Norm norm) {
    double e = 0.0;
    for (std::size_t i = 0; i < traces.size(); ++i)
        e = std::max(e, error_norm(trace_difference(traces[i], refs[i]), norm));
    return e;
}

// Shared iteration driver: runs `step` until the relative interface error
// meets cfg.tol or cfg.max_iters is hit.
template <typename StepFn>
ConvergenceHistory iterate(const DelayProblem& problem, const Partition& part,
                           std::vector<InterfaceTrace> traces, const WrConfig& cfg,
                           StepFn step) {
    const std::vector<InterfaceTrace> refs = reference_traces(problem, part);
    ConvergenceHistory hist;
    const double err0 = aggregate_error(traces, refs, cfg.norm);
    hist.error_norms.push_back(err0);
    if (err0 == 0.0) {
        hist.converged = true;
        hist.final_traces = std::move(traces);
        return hist;
    }
    for (int k = 1; k <= cfg.max_iters; ++k) {
        traces = step(traces);
        const double err = aggregate_error(traces, refs, cfg.norm);
        hist.error_norms.push_back(err);
        hist.iterations_run = k;
        if (err <= cfg.tol * err0) {
            hist.converged = true;
            break;
        }
    }
    hist.final_traces = std::move(traces);
    return hist;
}

ConvergenceHistory dnwr_engine(const DelayProblem& problem, const Partition& part,
                               const std::vector<InterfaceTrace>& traces0,
                               const WrConfig& cfg) {
    problem.validate();
    check_traces(part, traces0);
    if (cfg.theta <= 0.0 || cfg.theta >= 1.0)
        std::cerr << "dnwr: theta = " << cfg.theta << " outside (0,1)\n";

    const int n = part.subdomain_count();
    const int nt = part.global_grid.nt;
    const double dt = part.global_grid.dt;
    const int mid = (n + 1) / 2 - 1; // 0-based index of the middle subdomain
    const InterfaceTrace left_phys = sample_time_function(problem.boundary_left, nt, dt);
    const InterfaceTrace right_phys = sample_time_function(problem.boundary_right, nt, dt);

    auto step = [&](const std::vector<InterfaceTrace>& h) {
        std::vector<InterfaceTrace> next = h;
        // Pure Dirichlet solve in the middle subdomain.
        const InterfaceTrace& ml = (mid == 0) ? left_phys : h[mid - 1];
        const InterfaceTrace& mr = (mid == n - 1) ? right_phys : h[mid];
        SpaceTimeField mid_field =
            solve_subdomain(problem, part.sub_grids[mid], BoundarySpec::dirichlet(ml),
                            BoundarySpec::dirichlet(mr));
        // Rightward sweep: Neumann on the inner (left) interface.
        {
            const SpaceTimeField* inner = &mid_field;
            SpaceTimeField current = mid_field;
            for (int j = mid + 1; j < n; ++j) {
                InterfaceTrace flux = interface_flux(problem, *inner, Side::right);
                const InterfaceTrace& outer = (j == n - 1) ? right_phys : h[j];
                current = solve_subdomain(problem, part.sub_grids[j],
                                          BoundarySpec::neumann(std::move(flux)),
                                          BoundarySpec::dirichlet(outer));
                next[j - 1] = interface_update(h[j - 1], current.boundary_values(Side::left),
                                               cfg.theta);
                inner = &current;
            }
        }
        // Leftward sweep: Neumann on the inner (right) interface.
        {
            const SpaceTimeField* inner = &mid_field;
            SpaceTimeField current = mid_field;
            for (int j = mid - 1; j >= 0; --j) {
                InterfaceTrace flux = interface_flux(problem, *inner, Side::left);
                const InterfaceTrace& outer = (j == 0) ? left_phys : h[j - 1];
                current = solve_subdomain(problem, part.sub_grids[j],
                                          BoundarySpec::dirichlet(outer),
                                          BoundarySpec::neumann(std::move(flux)));
                next[j] = interface_update(h[j], current.boundary_values(Side::right),
                                           cfg.theta);
                inner = &current;
            }
        }
        return next;
    };
    return iterate(problem, part, traces0, cfg, step);
}

} // namespace

ConvergenceHistory dnwr_run(const DelayProblem& problem, const Partition& partition,
                            const InterfaceTrace& h0, const WrConfig& cfg) {
    if (partition.subdomain_count() != 2)
        throw NonConforming("dnwr_run: partition must have exactly 2 subdomains");
    return dnwr_engine(problem, partition, {h0}, cfg);
}

ConvergenceHistory dnwr_multi_run(const DelayProblem& problem, const Partition& partition,
                                  const std::vector<InterfaceTrace>& traces,
                                  const WrConfig& cfg) {
    return dnwr_engine(problem, partition, traces, cfg);
}

ConvergenceHistory nnwr_run(const DelayProblem& problem, const Partition& partition,
                            const std::vector<InterfaceTrace>& g0, const WrConfig& cfg) {
    problem.validate();
    check_traces(partition, g0);
    if (cfg.theta <= 0.0 || cfg.theta >= 0.5)
        std::cerr << "nnwr: theta = " << cfg.theta << " outside (0,1/2)\n";

    const int n = partition.subdomain_count();
    const int nt = partition.global_grid.nt;
    const double dt = partition.global_grid.dt;
    const InterfaceTrace left_phys = sample_time_function(problem.boundary_left, nt, dt);
    const InterfaceTrace right_phys = sample_time_function(problem.boundary_right, nt, dt);
    const InterfaceTrace zero = InterfaceTrace::zeros(nt, dt);
    // Corrections solve the homogeneous error equation; only the Dirichlet
    // phase carries the problem data.
    const DelayProblem correction_problem = DelayProblem::error_equation(
        problem.family, problem.tau, problem.x_min, problem.x_max, problem.t_end);

    auto step = [&](const std::vector<InterfaceTrace>& g) {
        // Dirichlet phase: mutually independent solves.
        std::vector<SpaceTimeField> dirichlet;
        dirichlet.reserve(n);
        for (int i = 0; i < n; ++i) {
            const InterfaceTrace& lt = (i == 0) ? left_phys : g[i - 1];
            const InterfaceTrace& rt = (i == n - 1) ? right_phys : g[i];
            dirichlet.push_back(solve_subdomain(problem, partition.sub_grids[i],
                                                BoundarySpec::dirichlet(lt),
                                                BoundarySpec::dirichlet(rt)));
        }
        // Flux jumps across each interface.
        std::vector<InterfaceTrace> jump;
        jump.reserve(n - 1);
        for (int i = 0; i + 1 < n; ++i) {
            InterfaceTrace d = trace_difference(interface_flux(problem, dirichlet[i], Side::right),
                                                interface_flux(problem, dirichlet[i + 1], Side::left));
            jump.push_back(std::move(d));
        }
        // Neumann correction phase: zero Dirichlet at physical ends, the
        // flux jump at interfaces (negated on the right-hand subdomain).
        std::vector<SpaceTimeField> corr;
        corr.reserve(n);
        for (int i = 0; i < n; ++i) {
            BoundarySpec lt = (i == 0) ? BoundarySpec::dirichlet(zero) : BoundarySpec::neumann([&] {
                InterfaceTrace t = jump[i - 1];
                for (double& v : t.values)
                    v = -v;
                return t;
            }());
            BoundarySpec rt =
                (i == n - 1) ? BoundarySpec::dirichlet(zero) : BoundarySpec::neumann(jump[i]);
            corr.push_back(solve_subdomain(correction_problem, partition.sub_grids[i], lt, rt));
        }
        // Relaxation update, independently per interface.
        std::vector<InterfaceTrace> next = g;
        for (int i = 0; i + 1 < n; ++i) {
            const InterfaceTrace phi_l = corr[i].boundary_values(Side::right);
            const InterfaceTrace phi_r = corr[i + 1].boundary_values(Side::left);
            for (int k = 0; k < nt; ++k)
                next[i].values[k] = g[i].values[k] -
                                    cfg.theta * (phi_l.values[k] + phi_r.values[k]);
        }
        return next;
    };
    return iterate(problem, partition, g0, cfg, step);
}

} // namespace delaydd
