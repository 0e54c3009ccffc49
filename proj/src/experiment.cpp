#include "delaydd/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "delaydd/errors.hpp"
#include "delaydd/solver.hpp"

namespace delaydd {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + v + "'");
    }
}

int to_int(const std::string& v, int line) {
    const double d = to_double(v, line);
    if (d != std::floor(d))
        throw ParseError(line, "expected an integer, got '" + v + "'");
    return static_cast<int>(d);
}

std::vector<double> to_list(const std::string& v, int line) {
    std::vector<double> out;
    std::istringstream is(v);
    std::string tok;
    while (is >> tok)
        out.push_back(to_double(tok, line));
    if (out.empty())
        throw ParseError(line, "expected at least one number");
    return out;
}

// Raw key-value entry with its source line, grouped by section.
struct RawSpec {
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>> sections;

    bool has(const std::string& sec, const std::string& key) const {
        auto s = sections.find(sec);
        return s != sections.end() && s->second.count(key) > 0;
    }
    std::pair<std::string, int> take(std::map<std::string, std::pair<std::string, int>>& sec,
                                     const std::string& key) {
        auto it = sec.find(key);
        auto out = it->second;
        sec.erase(it);
        return out;
    }
};

RawSpec tokenize(const std::string& text) {
    RawSpec raw;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int line_no = 0;
    static const std::set<std::string> known_sections = {"problem", "grid",  "method",
                                                         "partition", "guess", "output"};
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!known_sections.count(section))
                throw ParseError(line_no, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected 'key = value'");
        if (section.empty())
            throw ParseError(line_no, "key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ParseError(line_no, "empty key or value");
        if (raw.sections[section].count(key))
            throw ParseError(line_no, "duplicate key '" + key + "'");
        raw.sections[section][key] = {val, line_no};
    }
    return raw;
}

void reject_leftovers(const RawSpec& raw) {
    for (const auto& [sec, keys] : raw.sections)
        for (const auto& [key, val] : keys)
            throw ParseError(val.second, "unknown key '" + key + "' in [" + sec + "]");
}

} // namespace

ExperimentSpec parse_spec(const std::string& text) {
    RawSpec raw = tokenize(text);
    ExperimentSpec spec;

    auto require = [&](const char* sec, const char* key) -> std::pair<std::string, int> {
        if (!raw.has(sec, key))
            throw ValidationError(std::string("missing required field [") + sec + "] " + key);
        return raw.take(raw.sections[sec], key);
    };
    auto optional = [&](const char* sec, const char* key,
                        std::pair<std::string, int> def) -> std::pair<std::string, int> {
        if (!raw.has(sec, key))
            return def;
        return raw.take(raw.sections[sec], key);
    };

    // [problem]
    {
        auto [fam, fline] = require("problem", "family");
        auto [dom, dline] = require("problem", "domain");
        const std::vector<double> dd = to_list(dom, dline);
        if (dd.size() != 2 || !(dd[1] > dd[0]))
            throw ValidationError("domain must be 'x_min x_max' with x_min < x_max");
        spec.x_min = dd[0];
        spec.x_max = dd[1];
        spec.tau = to_double(require("problem", "tau").first, 0);
        spec.t_end = to_double(require("problem", "T").first, 0);
        auto opt_num = [&](const char* key, double def) {
            auto [v, l] = optional("problem", key, {std::to_string(def), 0});
            return to_double(v, l);
        };
        if (fam == "parabolic") {
            ParabolicFamily p;
            p.a1 = opt_num("a1", 0.0);
            p.a2 = opt_num("a2", 0.0);
            p.nu = opt_num("nu", 1.0);
            if (p.a2 == 0.0)
                throw ValidationError("parabolic family requires a2 != 0");
            spec.family = p;
        } else if (fam == "wave") {
            WaveFamily w;
            w.c = opt_num("c", 1.0);
            w.lambda = opt_num("lambda", 0.0);
            spec.family = w;
        } else if (fam == "neutral") {
            NeutralFamily n;
            n.mu = opt_num("mu", 1.0);
            n.c = opt_num("c", 0.0);
            n.r = opt_num("r", 0.0);
            n.d = opt_num("d", 0.0);
            spec.family = n;
        } else {
            throw ValidationError("family must be parabolic, wave or neutral; got '" + fam + "'");
        }
        if (!(spec.tau > 0.0))
            throw ValidationError("tau must be positive");
        if (!(spec.t_end > 0.0))
            throw ValidationError("T must be positive");
    }

    // [grid]
    {
        spec.dt = to_double(require("grid", "dt").first, 0);
        if (!(spec.dt > 0.0))
            throw ValidationError("dt must be positive");
        int given = 0;
        if (raw.has("grid", "nx")) {
            spec.nx = to_int(raw.take(raw.sections["grid"], "nx").first, 0);
            ++given;
        }
        if (raw.has("grid", "dx")) {
            spec.dx = to_double(raw.take(raw.sections["grid"], "dx").first, 0);
            ++given;
        }
        if (raw.has("grid", "points_per_subdomain")) {
            spec.points_per_subdomain =
                to_int(raw.take(raw.sections["grid"], "points_per_subdomain").first, 0);
            ++given;
        }
        if (given != 1)
            throw ValidationError("grid needs exactly one of nx, dx, points_per_subdomain");
    }

    // [method]
    {
        spec.method = require("method", "name").first;
        if (spec.method != "dnwr" && spec.method != "nnwr" && spec.method != "csw" &&
            spec.method != "osw")
            throw ValidationError("method name must be dnwr, nnwr, csw or osw");
        if (raw.has("method", "theta")) {
            auto [v, l] = raw.take(raw.sections["method"], "theta");
            spec.thetas = to_list(v, l);
        }
        if (raw.has("method", "p")) {
            auto [v, l] = raw.take(raw.sections["method"], "p");
            spec.ps = to_list(v, l);
        }
        spec.tol = to_double(optional("method", "tol", {"1e-6", 0}).first, 0);
        spec.max_iters = to_int(optional("method", "max_iters", {"100", 0}).first, 0);
        const std::string norm = optional("method", "norm", {"sup", 0}).first;
        if (norm == "sup")
            spec.norm = Norm::sup;
        else if (norm == "l2")
            spec.norm = Norm::l2_in_time;
        else
            throw ValidationError("norm must be sup or l2");
        spec.overlap_cells = to_int(optional("method", "overlap_cells", {"2", 0}).first, 0);

        if (spec.method == "dnwr" || spec.method == "nnwr") {
            if (spec.thetas.empty())
                throw ValidationError(spec.method + " requires at least one theta");
            const double hi = (spec.method == "dnwr") ? 1.0 : 0.5;
            for (double th : spec.thetas)
                if (!(th > 0.0) || !(th < hi))
                    throw ValidationError("theta out of (0," + std::string(hi == 1.0 ? "1" : "1/2") +
                                          "): " + std::to_string(th));
        }
        if (spec.method == "osw" && spec.ps.empty())
            throw ValidationError("osw requires at least one p");
        if ((spec.method == "dnwr" || spec.method == "nnwr") && !spec.ps.empty())
            throw ValidationError(spec.method + " does not take p");
        if ((spec.method == "csw" || spec.method == "osw") && !spec.thetas.empty())
            throw ValidationError(spec.method + " does not take theta");
        if (spec.method == "csw" && !spec.ps.empty())
            throw ValidationError("csw does not take p");
        if (!(spec.tol > 0.0))
            throw ValidationError("tol must be positive");
        if (spec.max_iters < 1)
            throw ValidationError("max_iters must be at least 1");
    }

    // [partition]
    {
        if (raw.has("partition", "n"))
            spec.n_subdomains = to_int(raw.take(raw.sections["partition"], "n").first, 0);
        if (raw.has("partition", "split")) {
            const std::string v = raw.take(raw.sections["partition"], "split").first;
            if (v != "equal")
                throw ValidationError("split must be 'equal' (or give boundaries)");
            spec.equal_split = true;
        }
        if (raw.has("partition", "boundaries")) {
            auto [v, l] = raw.take(raw.sections["partition"], "boundaries");
            spec.boundaries = to_list(v, l);
            spec.equal_split = false;
            if (spec.boundaries.size() < 3)
                throw ValidationError("boundaries needs at least 3 values");
            if (spec.boundaries.front() != spec.x_min || spec.boundaries.back() != spec.x_max)
                throw ValidationError("boundaries must start and end at the domain ends");
            spec.n_subdomains = static_cast<int>(spec.boundaries.size()) - 1;
        }
        if (spec.n_subdomains < 2)
            throw ValidationError("partition needs at least 2 subdomains");
        if ((spec.method == "csw" || spec.method == "osw") && spec.n_subdomains != 2)
            throw ValidationError("schwarz baselines need exactly 2 subdomains");
    }

    // [guess]
    if (raw.has("guess", "expr")) {
        spec.guess = raw.take(raw.sections["guess"], "expr").first;
        if (spec.guess != "t^2" && spec.guess != "zero" && spec.guess != "ones")
            throw ValidationError("guess expr must be t^2, zero or ones");
    }

    // [output]
    if (raw.has("output", "prefix"))
        spec.prefix = raw.take(raw.sections["output"], "prefix").first;

    reject_leftovers(raw);
    return spec;
}

DelayProblem ExperimentSpec::make_problem() const {
    return DelayProblem::error_equation(family, tau, x_min, x_max, t_end);
}

double ExperimentSpec::resolve_dx() const {
    if (dx > 0.0)
        return dx;
    if (nx > 0)
        return (x_max - x_min) / (nx - 1);
    // points per subdomain: equal widths
    const double width = (x_max - x_min) / n_subdomains;
    return width / (points_per_subdomain - 1);
}

Partition ExperimentSpec::make_partition() const {
    const double h = resolve_dx();
    if (equal_split) {
        std::vector<double> bounds(n_subdomains + 1);
        const double width = (x_max - x_min) / n_subdomains;
        for (int i = 0; i <= n_subdomains; ++i)
            bounds[i] = x_min + i * width;
        bounds[n_subdomains] = x_max;
        return Partition::from_boundaries(bounds, h, dt, t_end, tau);
    }
    return Partition::from_boundaries(boundaries, h, dt, t_end, tau);
}

InterfaceTrace ExperimentSpec::make_guess() const {
    const int nt = static_cast<int>(std::round(t_end / dt));
    InterfaceTrace tr = InterfaceTrace::zeros(nt, dt);
    for (int k = 1; k <= nt; ++k) {
        const double t = k * dt;
        tr.values[k - 1] = (guess == "zero") ? 0.0 : (guess == "ones" ? 1.0 : t * t);
    }
    return tr;
}

std::vector<RunResult> run_experiment(const ExperimentSpec& spec) {
    const DelayProblem problem = spec.make_problem();
    std::vector<RunResult> results;

    if (spec.method == "dnwr" || spec.method == "nnwr") {
        const Partition part = spec.make_partition();
        const InterfaceTrace guess = spec.make_guess();
        const std::vector<InterfaceTrace> guesses(part.interface_count(), guess);
        for (double th : spec.thetas) {
            WrConfig cfg{th, spec.tol, spec.max_iters, spec.norm};
            RunResult r;
            r.method = spec.method;
            r.param = th;
            r.history = (spec.method == "dnwr") ? dnwr_multi_run(problem, part, guesses, cfg)
                                                : nnwr_run(problem, part, guesses, cfg);
            results.push_back(std::move(r));
        }
        return results;
    }

    // Schwarz baselines: two subdomains split at the middle boundary.
    const double split = spec.equal_split ? 0.5 * (spec.x_min + spec.x_max)
                                          : spec.boundaries[1];
    SchwarzConfig cfg;
    cfg.overlap_cells = spec.overlap_cells;
    cfg.tol = spec.tol;
    cfg.max_iters = spec.max_iters;
    cfg.norm = spec.norm;
    const InterfaceTrace guess = spec.make_guess();
    const auto guesses = std::make_pair(guess, guess);
    if (spec.method == "csw") {
        RunResult r;
        r.method = "csw";
        r.param = 0.0;
        r.history = classical_schwarz_run(problem, split, cfg, guesses, spec.resolve_dx());
        results.push_back(std::move(r));
    } else {
        for (double p : spec.ps) {
            cfg.robin_p = p;
            RunResult r;
            r.method = "osw";
            r.param = p;
            r.history = optimized_schwarz_run(problem, split, cfg, guesses, spec.resolve_dx());
            results.push_back(std::move(r));
        }
    }
    return results;
}

bool all_converged(const std::vector<RunResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const RunResult& r) { return r.history.converged; });
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Shortest round-trip decimal form, for file names.
std::string fmt_shortest(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

} // namespace

void write_history_csv(const std::vector<RunResult>& results, const std::string& path) {
    std::vector<const RunResult*> order;
    order.reserve(results.size());
    for (const auto& r : results)
        order.push_back(&r);
    std::stable_sort(order.begin(), order.end(), [](const RunResult* a, const RunResult* b) {
        if (a->method != b->method)
            return a->method < b->method;
        return a->param < b->param;
    });

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << "method,theta,iteration,error_norm\n";
    for (const RunResult* r : order)
        for (std::size_t k = 0; k < r->history.error_norms.size(); ++k)
            out << r->method << ',' << fmt17(r->param) << ',' << k << ','
                << fmt17(r->history.error_norms[k]) << '\n';
    if (!out.flush())
        throw IoError("write failed for '" + path + "'");
}

std::string run_filename(const ExperimentSpec& spec, const RunResult& run) {
    return spec.prefix + "__" + run.method + "__theta" + fmt_shortest(run.param) + ".csv";
}

SpaceTimeField monolithic_solve(const DelayProblem& problem, const Grid1D& grid) {
    return solve_subdomain(
        problem, grid,
        BoundarySpec::dirichlet(sample_time_function(problem.boundary_left, grid.nt, grid.dt)),
        BoundarySpec::dirichlet(sample_time_function(problem.boundary_right, grid.nt, grid.dt)));
}

std::string gnuplot_script(const ExperimentSpec& spec, const std::vector<RunResult>& results) {
    std::ostringstream os;
    os << "set logscale y\n"
       << "set xlabel 'iteration'\n"
       << "set ylabel 'interface error (" << (spec.norm == Norm::sup ? "sup" : "l2") << ")'\n"
       << "set datafile separator ','\n"
       << "plot ";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i)
            os << ", \\\n     ";
        os << "'" << run_filename(spec, results[i]) << "' every ::1 using 3:4 with linespoints"
           << " title '" << results[i].method << " " << fmt_shortest(results[i].param) << "'";
    }
    os << "\n";
    return os.str();
}

} // namespace delaydd
