#pragma once

#include <string>
#include <vector>

#include "delaydd/partition.hpp"
#include "delaydd/problem.hpp"
#include "delaydd/schwarz.hpp"
#include "delaydd/waveform.hpp"

namespace delaydd {

/// Parsed experiment configuration. The document is a flat key-value format
/// with sections [problem] [grid] [method] [partition] [guess] [output];
/// see the shipped .spec files for the schema. Experiments run the
/// homogeneous error equation with the configured initial interface guess.
struct ExperimentSpec {
    // [problem]
    Family family;
    double tau = 0.0;
    double t_end = 0.0;
    double x_min = 0.0;
    double x_max = 0.0;

    // [grid] — dt plus exactly one of nx / dx / points_per_subdomain
    double dt = 0.0;
    int nx = 0;
    double dx = 0.0;
    int points_per_subdomain = 0;

    // [method]
    std::string method;          ///< dnwr | nnwr | csw | osw
    std::vector<double> thetas;  ///< one run per value (dnwr/nnwr)
    std::vector<double> ps;      ///< one run per value (osw)
    double tol = 1e-6;
    int max_iters = 100;
    Norm norm = Norm::sup;
    int overlap_cells = 2;

    // [partition]
    int n_subdomains = 2;
    bool equal_split = true;
    std::vector<double> boundaries; ///< used when equal_split is false

    // [guess]
    std::string guess = "t^2"; ///< t^2 | zero | ones

    // [output]
    std::string prefix; ///< CSV name stem; defaults to the spec file stem

    DelayProblem make_problem() const;
    Partition make_partition() const;
    InterfaceTrace make_guess() const;
    double resolve_dx() const;
};

/// Parses and validates a config document. Throws ParseError (malformed
/// line, unknown key or section) or ValidationError (bad field value).
ExperimentSpec parse_spec(const std::string& text);

/// One method run (one theta or p value) of an experiment.
struct RunResult {
    std::string method;
    double param = 0.0; ///< theta (dnwr/nnwr), p (osw), 0 (csw)
    ConvergenceHistory history;
};

/// Executes the experiment, one run per configured theta/p value, in the
/// order given. Deterministic for a fixed spec.
std::vector<RunResult> run_experiment(const ExperimentSpec& spec);

bool all_converged(const std::vector<RunResult>& results);

/// Writes runs as CSV: header `method,theta,iteration,error_norm`, one row
/// per iteration per run (k=0 included), floats with 17 significant digits,
/// rows ordered by (method, theta, iteration). Throws IoError.
void write_history_csv(const std::vector<RunResult>& results, const std::string& path);

/// Output file name for one run: `<prefix>__<method>__theta<value>.csv`
/// (the theta slot holds the run's parameter: theta, p, or 0 for csw).
std::string run_filename(const ExperimentSpec& spec, const RunResult& run);

/// Whole-domain reference solve with the problem's own Dirichlet boundaries.
SpaceTimeField monolithic_solve(const DelayProblem& problem, const Grid1D& grid);

/// Gnuplot script plotting every run CSV of an experiment, written next to
/// the data on request.
std::string gnuplot_script(const ExperimentSpec& spec, const std::vector<RunResult>& results);

} // namespace delaydd
