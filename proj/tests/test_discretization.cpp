#include <doctest.h>

#include <cmath>
#include <random>

#include "delaydd/errors.hpp"
#include "delaydd/grid.hpp"
#include "delaydd/solver.hpp"
#include "delaydd/tridiag.hpp"
#include "oracle.hpp"

using namespace delaydd;

namespace {

InterfaceTrace sampled(int nt, double dt, double (*fn)(double)) {
    InterfaceTrace tr = InterfaceTrace::zeros(nt, dt);
    for (int k = 1; k <= nt; ++k)
        tr.values[k - 1] = fn(k * dt);
    return tr;
}

double max_abs_diff(const SpaceTimeField& f, const std::vector<double>& ref) {
    double m = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.grid().nx; ++j)
            m = std::max(m, std::abs(f.at(i, j) - ref[idx++]));
    return m;
}

} // namespace

TEST_CASE("build_grid: experiment discretizations and rejections") {
    const Grid1D g = build_grid(0.0, 6.0, 61, 0.1, 6.0, 1.5);
    CHECK(g.dx == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(g.nt == 60);
    CHECK(g.delay_steps == 15);

    CHECK(build_grid(0.0, 6.0, 61, 0.1, 6.0, 3.0).delay_steps == 30);

    CHECK_THROWS_AS(build_grid(0.0, 1.0, 11, 0.1, 1.0, 0.25), NonIntegerDelay);
    CHECK_THROWS_AS(build_grid(0.0, 1.0, 11, 0.1, 1.05, 0.2), NonIntegerHorizon);
    CHECK_THROWS_AS(build_grid(0.0, 1.0, 2, 0.1, 1.0, 0.2), NonConforming);
}

TEST_CASE("thomas_solve: identity and 2x2") {
    const std::vector<double> none{};
    {
        std::vector<double> diag{1, 1, 1, 1}, sub{0, 0, 0}, sup{0, 0, 0}, rhs{4, -1, 0.5, 9};
        const auto x = thomas_solve(sub, diag, sup, rhs);
        for (int i = 0; i < 4; ++i)
            CHECK(x[i] == rhs[i]);
    }
    {
        std::vector<double> diag{2, 2}, sub{1}, sup{1}, rhs{3, 3};
        const auto x = thomas_solve(sub, diag, sup, rhs);
        CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("thomas_solve: random diagonally dominant system matches dense LU") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 8;
    std::vector<double> sub(n - 1), diag(n), sup(n - 1), rhs(n);
    for (int i = 0; i < n - 1; ++i) {
        sub[i] = u(rng);
        sup[i] = u(rng);
    }
    for (int i = 0; i < n; ++i) {
        diag[i] = 3.0 + u(rng); // dominant
        rhs[i] = u(rng);
    }
    std::vector<double> A(n * n, 0.0);
    for (int i = 0; i < n; ++i) {
        A[i * n + i] = diag[i];
        if (i > 0)
            A[i * n + i - 1] = sub[i - 1];
        if (i < n - 1)
            A[i * n + i + 1] = sup[i];
    }
    const auto expect = oracle::dense_solve(A, rhs);
    const auto got = thomas_solve(sub, diag, sup, rhs);
    for (int i = 0; i < n; ++i)
        CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-10));
}

TEST_CASE("thomas_solve: zero pivot rejected") {
    std::vector<double> diag{0.0, 1.0}, sub{1.0}, sup{1.0}, rhs{1.0, 1.0};
    CHECK_THROWS_AS(thomas_solve(sub, diag, sup, rhs), ZeroPivot);
}

TEST_CASE("solve_subdomain: zero data is a bitwise fixed point of every family") {
    const Family families[] = {Family{ParabolicFamily{1.0, 2.3, 1.0}},
                               Family{WaveFamily{1.0, 0.5}},
                               Family{NeutralFamily{1.0, 0.1, 0.05, 0.0025}}};
    for (const Family& fam : families) {
        const DelayProblem p = DelayProblem::error_equation(fam, 0.5, 0.0, 3.0, 1.0);
        const Grid1D g = build_grid(0.0, 3.0, 16, 0.1, 1.0, 0.5);
        const auto zero = InterfaceTrace::zeros(g.nt, g.dt);
        const SpaceTimeField f = solve_subdomain(p, g, BoundarySpec::dirichlet(zero),
                                                 BoundarySpec::neumann(zero));
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < g.nx; ++j)
                CHECK(f.at(i, j) == 0.0);
    }
}

TEST_CASE("solve_subdomain: case-1 Dirichlet run matches the dense oracle") {
    const DelayProblem p =
        DelayProblem::error_equation(ParabolicFamily{1.0, 2.3, 1.0}, 1.5, 0.0, 3.0, 6.0);
    const Grid1D g = build_grid(0.0, 3.0, 31, 0.1, 6.0, 1.5);
    const auto zero = InterfaceTrace::zeros(g.nt, g.dt);
    const auto h = sampled(g.nt, g.dt, [](double t) { return t * t; });

    const SpaceTimeField f =
        solve_subdomain(p, g, BoundarySpec::dirichlet(zero), BoundarySpec::dirichlet(h));
    const auto ref = oracle::dense_delay_solve(p, 0.0, 3.0, g.nx, g.dt, g.nt, g.delay_steps,
                                               {'D', zero.values}, {'D', h.values});
    CHECK(max_abs_diff(f, ref) <= 1e-10);
}

TEST_CASE("solve_subdomain: dense-oracle equivalence, all families and BC combinations") {
    const Family families[] = {Family{ParabolicFamily{0.7, -1.1, 0.8}},
                               Family{WaveFamily{1.3, -0.4}},
                               Family{NeutralFamily{0.9, 0.3, -0.2, 0.15}}};
    const double tau = 0.4, T = 1.2;
    const int nx = 9, nt = 12;
    for (const Family& fam : families) {
        DelayProblem p = DelayProblem::error_equation(fam, tau, 0.0, 2.0, T);
        p.history = [](double x, double t) { return std::sin(1.3 * x) * (1.0 + 0.5 * t); };
        p.forcing = [](double x, double t) { return std::cos(x) * std::exp(-0.3 * t) + 0.2; };
        const Grid1D g = build_grid(0.0, 2.0, nx, 0.1, T, tau);

        const auto dval = sampled(nt, g.dt, [](double t) { return 0.3 * t + 0.1; });
        const auto nval = sampled(nt, g.dt, [](double t) { return std::sin(t) - 0.2; });
        const BoundarySpec combos[4][2] = {
            {BoundarySpec::dirichlet(dval), BoundarySpec::dirichlet(nval)},
            {BoundarySpec::dirichlet(dval), BoundarySpec::neumann(nval)},
            {BoundarySpec::neumann(nval), BoundarySpec::dirichlet(dval)},
            {BoundarySpec::neumann(dval), BoundarySpec::neumann(nval)},
        };
        for (const auto& combo : combos) {
            const SpaceTimeField f = solve_subdomain(p, g, combo[0], combo[1]);
            const auto ref = oracle::dense_delay_solve(
                p, 0.0, 2.0, nx, g.dt, nt, g.delay_steps,
                {combo[0].kind == BoundaryKind::dirichlet ? 'D' : 'N', combo[0].data.values},
                {combo[1].kind == BoundaryKind::dirichlet ? 'D' : 'N', combo[1].data.values});
            CHECK(max_abs_diff(f, ref) <= 1e-10);
        }
    }
}

TEST_CASE("solve_subdomain: linearity of the scheme in its data") {
    const Family families[] = {Family{ParabolicFamily{1.0, 2.3, 1.0}},
                               Family{WaveFamily{1.0, 0.5}},
                               Family{NeutralFamily{1.0, 0.1, 0.05, 0.0025}}};
    const double alpha = 1.7, beta = -0.6;
    for (const Family& fam : families) {
        DelayProblem p1 = DelayProblem::error_equation(fam, 0.5, 0.0, 2.0, 1.0);
        DelayProblem p2 = p1, pc = p1;
        p1.history = [](double x, double t) { return std::sin(x) * (1.0 - t); };
        p1.forcing = [](double x, double t) { return x * t; };
        p2.history = [](double x, double t) { return std::cos(2.0 * x) + t * t; };
        p2.forcing = [](double x, double t) { return std::exp(-x) * std::sin(2.0 * t); };
        pc.history = [&, a = alpha, b = beta](double x, double t) {
            return a * p1.history(x, t) + b * p2.history(x, t);
        };
        pc.forcing = [&, a = alpha, b = beta](double x, double t) {
            return a * p1.forcing(x, t) + b * p2.forcing(x, t);
        };
        const Grid1D g = build_grid(0.0, 2.0, 11, 0.1, 1.0, 0.5);
        const auto d1 = sampled(g.nt, g.dt, [](double t) { return t * t; });
        const auto d2 = sampled(g.nt, g.dt, [](double t) { return std::sin(3.0 * t); });
        const auto n1 = sampled(g.nt, g.dt, [](double t) { return 0.5 - t; });
        const auto n2 = sampled(g.nt, g.dt, [](double t) { return std::cos(t); });

        auto mix = [&](const InterfaceTrace& a, const InterfaceTrace& b) {
            InterfaceTrace out = a;
            for (std::size_t k = 0; k < out.size(); ++k)
                out.values[k] = alpha * a.values[k] + beta * b.values[k];
            return out;
        };
        const SpaceTimeField f1 = solve_subdomain(p1, g, BoundarySpec::dirichlet(d1),
                                                  BoundarySpec::neumann(n1));
        const SpaceTimeField f2 = solve_subdomain(p2, g, BoundarySpec::dirichlet(d2),
                                                  BoundarySpec::neumann(n2));
        const SpaceTimeField fc = solve_subdomain(pc, g, BoundarySpec::dirichlet(mix(d1, d2)),
                                                  BoundarySpec::neumann(mix(n1, n2)));
        double err = 0.0;
        for (int i = 0; i < fc.rows(); ++i)
            for (int j = 0; j < g.nx; ++j)
                err = std::max(err,
                               std::abs(alpha * f1.at(i, j) + beta * f2.at(i, j) - fc.at(i, j)));
        CHECK(err <= 1e-10);
    }
}

TEST_CASE("solve_subdomain: history perturbations respect the delay") {
    // An impulse in the history slab at time t0 < 0 must leave the solution
    // bitwise zero before t0 + tau.
    const Grid1D g = build_grid(0.0, 2.0, 9, 0.1, 1.2, 0.5); // m = 5
    const int m = g.delay_steps;
    const int impulse_row = 2; // t0 = (2 - 5) * 0.1 = -0.3
    const int impulse_node = 4;
    auto impulse = [&](double x, double t) {
        const double t0 = (impulse_row - m) * g.dt;
        const double xk = g.x(impulse_node);
        return (std::abs(t - t0) < 0.5 * g.dt && std::abs(x - xk) < 0.5 * g.dx) ? 1.0 : 0.0;
    };
    const Family families[] = {Family{ParabolicFamily{1.0, 2.3, 1.0}},
                               Family{WaveFamily{1.0, 0.5}},
                               Family{NeutralFamily{1.0, 0.1, 0.05, 0.0025}}};
    for (const Family& fam : families) {
        DelayProblem p = DelayProblem::error_equation(fam, 0.5, 0.0, 2.0, 1.2);
        p.history = impulse;
        const auto zero = InterfaceTrace::zeros(g.nt, g.dt);
        const SpaceTimeField f = solve_subdomain(p, g, BoundarySpec::dirichlet(zero),
                                                 BoundarySpec::dirichlet(zero));
        // zero strictly before t0 + tau, i.e. before level = impulse_row
        for (int level = 1; level < impulse_row; ++level)
            for (int j = 0; j < g.nx; ++j)
                CHECK(f.at(f.level_row(level), j) == 0.0);
        // first touched level is nonzero somewhere
        double mx = 0.0;
        for (int j = 0; j < g.nx; ++j)
            mx = std::max(mx, std::abs(f.at(f.level_row(impulse_row), j)));
        CHECK(mx > 0.0);
    }
}

TEST_CASE("extract_flux: exact on linear and quadratic fields") {
    const Grid1D g = build_grid(0.0, 2.0, 21, 0.1, 0.5, 0.2);
    SpaceTimeField f(g);
    SUBCASE("zero field") {
        const auto tl = extract_flux(f, Side::left);
        const auto tr = extract_flux(f, Side::right);
        for (int k = 0; k < g.nt; ++k) {
            CHECK(tl.values[k] == 0.0);
            CHECK(tr.values[k] == 0.0);
        }
    }
    SUBCASE("u = x gives exactly 1 on both sides") {
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < g.nx; ++j)
                f.at(i, j) = g.x(j);
        for (double v : extract_flux(f, Side::left).values)
            CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
        for (double v : extract_flux(f, Side::right).values)
            CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("u = x^2 gives 2x at each boundary") {
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < g.nx; ++j)
                f.at(i, j) = g.x(j) * g.x(j);
        for (double v : extract_flux(f, Side::left).values)
            CHECK(std::abs(v - 2.0 * g.x_min) <= 1e-12);
        for (double v : extract_flux(f, Side::right).values)
            CHECK(std::abs(v - 2.0 * g.x_max) <= 1e-12);
    }
}

TEST_CASE("interface_flux: feeding the flux back reproduces the field") {
    // The scheme-consistent flux of a Dirichlet solve, imposed as Neumann
    // data on the same grid, must reproduce that solve exactly.
    const Family families[] = {Family{ParabolicFamily{1.0, 2.3, 1.0}},
                               Family{WaveFamily{1.0, 0.5}},
                               Family{NeutralFamily{1.0, 0.1, 0.05, 0.0025}}};
    for (const Family& fam : families) {
        DelayProblem p = DelayProblem::error_equation(fam, 0.5, 0.0, 2.0, 1.0);
        p.history = [](double x, double t) { return std::cos(x) * (1.0 + t); };
        const Grid1D g = build_grid(0.0, 2.0, 11, 0.1, 1.0, 0.5);
        const auto zero = InterfaceTrace::zeros(g.nt, g.dt);
        const auto h = sampled(g.nt, g.dt, [](double t) { return t * t; });
        const SpaceTimeField f =
            solve_subdomain(p, g, BoundarySpec::dirichlet(zero), BoundarySpec::dirichlet(h));
        const InterfaceTrace flux = interface_flux(p, f, Side::right);
        const SpaceTimeField f2 =
            solve_subdomain(p, g, BoundarySpec::dirichlet(zero), BoundarySpec::neumann(flux));
        double err = 0.0;
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < g.nx; ++j)
                err = std::max(err, std::abs(f.at(i, j) - f2.at(i, j)));
        CHECK(err <= 1e-11);
    }
}

TEST_CASE("solve_subdomain: grid/problem delay mismatch is rejected") {
    const DelayProblem p =
        DelayProblem::error_equation(ParabolicFamily{1.0, 2.3, 1.0}, 1.5, 0.0, 3.0, 6.0);
    const Grid1D g = build_grid(0.0, 3.0, 31, 0.1, 6.0, 3.0); // tau = 3 != 1.5
    const auto zero = InterfaceTrace::zeros(g.nt, g.dt);
    CHECK_THROWS_AS(
        solve_subdomain(p, g, BoundarySpec::dirichlet(zero), BoundarySpec::dirichlet(zero)),
        NonConforming);
}

TEST_CASE("solve_subdomain: manufactured solution converges at the scheme orders") {
    // u = sin(pi x) e^{-t} on (0,1); forcing chosen so u solves the parabolic
    // family. Temporal refinement at fixed fine dx, then spatial refinement
    // at tiny dt; the refinement study itself is the oracle.
    const double a1 = 1.0, a2 = 2.3, nu = 1.0;
    auto exact = [](double x, double t) { return std::sin(M_PI * x) * std::exp(-t); };
    auto run = [&](int nx, double dt, double T, double tau) {
        DelayProblem p = DelayProblem::error_equation(ParabolicFamily{a1, a2, nu}, tau, 0, 1, T);
        const double C = -1.0 + nu * nu * M_PI * M_PI + a1 + a2 * std::exp(tau);
        p.history = exact;
        p.forcing = [C, exact](double x, double t) { return C * exact(x, t); };
        const Grid1D g = build_grid(0.0, 1.0, nx, dt, T, tau);
        const auto zero = InterfaceTrace::zeros(g.nt, g.dt);
        const SpaceTimeField f =
            solve_subdomain(p, g, BoundarySpec::dirichlet(zero), BoundarySpec::dirichlet(zero));
        double err = 0.0;
        for (int level = 1; level <= g.nt; ++level)
            for (int j = 0; j < g.nx; ++j)
                err = std::max(err,
                               std::abs(f.at(f.level_row(level), j) - exact(g.x(j), level * g.dt)));
        return err;
    };
    const double et1 = run(257, 0.05, 0.4, 0.2);
    const double et2 = run(257, 0.0125, 0.4, 0.2);
    CHECK(std::log2(et1 / et2) / 2.0 >= 0.9);

    const double es1 = run(11, 1.0 / 4096, 0.25, 0.125);
    const double es2 = run(41, 1.0 / 4096, 0.25, 0.125);
    CHECK(std::log2(es1 / es2) / 2.0 >= 1.9);
}
