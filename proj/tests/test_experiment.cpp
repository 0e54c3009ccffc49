#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "delaydd/errors.hpp"
#include "delaydd/experiment.hpp"

using namespace delaydd;
namespace fs = std::filesystem;

namespace {

const char* kMinimalSpec = R"(# smallest valid parabolic experiment
[problem]
family = parabolic
a1 = 1.0
a2 = 2.3
nu = 1.0
tau = 1.5
domain = 0 6
T = 6

[grid]
dt = 0.1
nx = 61

[method]
name = dnwr
theta = 0.5
)";

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("parse_spec: minimal document gets the documented defaults") {
    const ExperimentSpec s = parse_spec(kMinimalSpec);
    CHECK(s.norm == Norm::sup);
    CHECK(s.max_iters == 100);
    CHECK(s.tol == doctest::Approx(1e-6));
    CHECK(s.n_subdomains == 2);
    CHECK(s.equal_split);
    CHECK(s.guess == "t^2");
    CHECK(s.thetas.size() == 1);
}

TEST_CASE("parse_spec: out-of-range theta is a validation error") {
    std::string text = kMinimalSpec;
    text.replace(text.find("theta = 0.5"), 11, "theta = 1.5");
    try {
        parse_spec(text);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("theta out of (0,1)") != std::string::npos);
    }
}

TEST_CASE("parse_spec: unknown keys and sections are rejected with a line number") {
    std::string text = kMinimalSpec;
    text += "flux_capacitor = 88\n";
    CHECK_THROWS_AS(parse_spec(text), ParseError);

    CHECK_THROWS_AS(parse_spec("[warp]\nspeed = 9\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("orphan = 1\n"), ParseError);
}

TEST_CASE("parse_spec: shipped fig1_left queues four runs") {
    const ExperimentSpec s = parse_spec(slurp(fs::path(SPECS_DIR) / "fig1_left.spec"));
    CHECK(s.method == "dnwr");
    CHECK(s.thetas.size() == 4);
    const auto results = run_experiment(s);
    REQUIRE(results.size() == 4);
    for (const auto& r : results)
        CHECK(r.history.converged);
    // theta = 1/2 reaches 1e-10 relative error by iteration 2
    for (const auto& r : results) {
        if (r.param == 0.5) {
            CHECK(r.history.iterations_run <= 2);
            CHECK(r.history.error_norms.back() / r.history.error_norms.front() <= 1e-10);
        }
        if (r.param == 0.3) {
            // linear decay at slope log(0.4)
            const auto& e = r.history.error_norms;
            REQUIRE(e.size() >= 6);
            for (std::size_t k = 3; k + 1 < 6; ++k)
                CHECK(std::abs(e[k + 1] / e[k] - 0.4) <= 0.04);
        }
    }
}

TEST_CASE("run_experiment: zero guess converges without iterating") {
    std::string text = kMinimalSpec;
    text += "\n[guess]\nexpr = zero\n";
    const auto results = run_experiment(parse_spec(text));
    REQUIRE(results.size() == 1);
    CHECK(results[0].history.converged);
    CHECK(results[0].history.iterations_run == 0);
    CHECK(results[0].history.error_norms.size() == 1);
}

TEST_CASE("write_history_csv: row count, ordering and byte determinism") {
    std::string text = kMinimalSpec;
    text.replace(text.find("theta = 0.5"), 11, "theta = 0.7 0.3");
    ExperimentSpec s = parse_spec(text);
    s.max_iters = 3;
    s.tol = 1e-300;
    s.prefix = "unit";
    const auto results = run_experiment(s);
    REQUIRE(results.size() == 2);
    CHECK(results[0].history.error_norms.size() == 4); // k = 0..3

    const fs::path dir = fs::temp_directory_path() / "delaydd_csv_test";
    fs::create_directories(dir);
    const fs::path p1 = dir / "a.csv", p2 = dir / "b.csv";
    write_history_csv(results, p1.string());
    write_history_csv(run_experiment(s), p2.string());

    const std::string c1 = slurp(p1), c2 = slurp(p2);
    CHECK(c1 == c2); // identical spec -> identical bytes

    std::istringstream is(c1);
    std::string line;
    std::getline(is, line);
    CHECK(line == "method,theta,iteration,error_norm");
    // rows grouped by theta ascending, iteration within
    std::getline(is, line);
    CHECK(line.find("dnwr,0.2999") != std::string::npos);
    CHECK(line.substr(line.find(",0.2999") - 4, 4) == "dnwr");
    int rows = 1;
    while (std::getline(is, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == 8); // 2 runs x 4 iterations
    fs::remove_all(dir);
}

TEST_CASE("run_filename: parameter slot uses the shortest round-trip form") {
    ExperimentSpec s = parse_spec(kMinimalSpec);
    s.prefix = "pref";
    RunResult r;
    r.method = "dnwr";
    r.param = 0.5;
    CHECK(run_filename(s, r) == "pref__dnwr__theta0.5.csv");
    r.param = 0.3;
    CHECK(run_filename(s, r) == "pref__dnwr__theta0.3.csv");
}

TEST_CASE("monolithic_solve: error-equation mode returns the zero field") {
    const auto p =
        DelayProblem::error_equation(ParabolicFamily{1.0, 2.3, 1.0}, 1.5, 0.0, 6.0, 6.0);
    const Grid1D g = build_grid(0.0, 6.0, 61, 0.1, 6.0, 1.5);
    const SpaceTimeField f = monolithic_solve(p, g);
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < g.nx; ++j)
            CHECK(f.at(i, j) == 0.0);
}
