#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "delaydd/errors.hpp"
#include "delaydd/experiment.hpp"
#include "delaydd/symbols.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw delaydd::IoError("cannot read '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_run(const std::string& spec_path, const std::string& out_dir,
            const std::string& specs_dir, bool emit_gnuplot) {
    fs::path path = spec_path;
    if (!fs::exists(path)) {
        // allow a bare shipped-spec name
        fs::path candidate = fs::path(specs_dir) / (spec_path + ".spec");
        if (fs::exists(candidate))
            path = candidate;
        else
            throw delaydd::IoError("no such spec file: '" + spec_path + "'");
    }

    delaydd::ExperimentSpec spec = delaydd::parse_spec(read_file(path));
    if (spec.prefix.empty())
        spec.prefix = path.stem().string();

    const std::vector<delaydd::RunResult> results = delaydd::run_experiment(spec);

    fs::create_directories(out_dir);
    for (const auto& run : results) {
        const fs::path out = fs::path(out_dir) / delaydd::run_filename(spec, run);
        delaydd::write_history_csv({run}, out.string());
        const auto& h = run.history;
        std::cout << spec.prefix << " " << run.method << " param=" << run.param << ": "
                  << (h.converged ? "converged" : "NOT converged") << " after "
                  << h.iterations_run << " iterations (final rel err "
                  << (h.error_norms.front() > 0.0
                          ? h.error_norms.back() / h.error_norms.front()
                          : 0.0)
                  << ") -> " << out.string() << "\n";
    }
    if (emit_gnuplot) {
        const fs::path gp = fs::path(out_dir) / (spec.prefix + ".gp");
        std::ofstream out(gp, std::ios::binary);
        out << delaydd::gnuplot_script(spec, results);
        std::cout << "gnuplot script -> " << gp.string() << "\n";
    }
    return delaydd::all_converged(results) ? 0 : 2;
}

int cmd_list(const std::string& specs_dir) {
    if (!fs::is_directory(specs_dir)) {
        std::cerr << "specs directory '" << specs_dir << "' not found\n";
        return 1;
    }
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(specs_dir))
        if (entry.path().extension() == ".spec")
            names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    for (const auto& n : names)
        std::cout << n << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"delay-dd: waveform-relaxation experiments for 1D delay PDEs"};
    app.require_subcommand(1);

    std::string spec_path, out_dir = ".", specs_dir = "specs";
    bool emit_gnuplot = false;
    auto* run = app.add_subcommand("run", "run an experiment spec and write CSV histories");
    run->add_option("spec", spec_path, "spec file path or shipped spec name")->required();
    run->add_option("--out", out_dir, "output directory (default: .)");
    run->add_option("--specs-dir", specs_dir, "directory with shipped specs");
    run->add_flag("--gnuplot", emit_gnuplot, "also write a gnuplot script");

    auto* list = app.add_subcommand("list-specs", "list shipped experiment specs");
    list->add_option("--specs-dir", specs_dir, "directory with shipped specs");

    std::string method = "dnwr", family = "parabolic", s_arg = "1,0";
    delaydd::SymbolQuery query;
    auto* sym = app.add_subcommand("symbol",
                                   "evaluate the Laplace-domain contraction factor");
    sym->add_option("--method", method, "dnwr | nnwr");
    sym->add_option("--family", family, "parabolic | wave | neutral");
    sym->add_option("--a", query.a, "left subdomain width");
    sym->add_option("--b", query.b, "right subdomain width");
    sym->add_option("--theta", query.theta, "relaxation parameter");
    sym->add_option("--s", s_arg, "Laplace variable as RE,IM");
    sym->add_option("--tau", query.tau, "delay");
    sym->add_option("--c", query.c, "wave speed / neutral delayed-diffusion factor");
    sym->add_option("--lambda", query.lambda, "wave delay coupling");
    sym->add_option("--mu", query.mu, "neutral diffusion");
    sym->add_option("--r", query.r, "neutral reaction");
    sym->add_option("--d", query.d, "neutral delay coupling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(spec_path, out_dir, specs_dir, emit_gnuplot);
        if (list->parsed())
            return cmd_list(specs_dir);

        if (method == "dnwr")
            query.method = delaydd::WrMethod::dnwr;
        else if (method == "nnwr")
            query.method = delaydd::WrMethod::nnwr;
        else
            throw delaydd::ValidationError("method must be dnwr or nnwr");
        if (family == "parabolic")
            query.family = delaydd::SymbolFamily::parabolic;
        else if (family == "wave")
            query.family = delaydd::SymbolFamily::wave;
        else if (family == "neutral") {
            query.family = delaydd::SymbolFamily::neutral;
            query.neutral_c = query.c;
        } else
            throw delaydd::ValidationError("family must be parabolic, wave or neutral");
        const auto comma = s_arg.find(',');
        if (comma == std::string::npos)
            throw delaydd::ValidationError("--s expects RE,IM");
        query.s = {std::stod(s_arg.substr(0, comma)), std::stod(s_arg.substr(comma + 1))};

        const std::complex<double> f = delaydd::contraction_symbol(query);
        std::cout << "factor = " << f.real() << (f.imag() < 0 ? " - " : " + ")
                  << std::abs(f.imag()) << "i   |factor| = " << std::abs(f) << "\n";
        return 0;
    } catch (const delaydd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
