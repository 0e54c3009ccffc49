#pragma once

#include <functional>
#include <variant>

namespace delaydd {

/// u_t = nu^2 u_xx - a1 u - a2 u(t-tau) + f
struct ParabolicFamily {
    double a1 = 0.0;
    double a2 = 0.0;
    double nu = 1.0;
};

/// u_tt = c^2 u_xx + lambda u(t-tau) + f
struct WaveFamily {
    double c = 1.0;
    double lambda = 0.0;
};

/// u_t = mu^2 u_xx + mu^2 c^2 u_xx(t-tau) + r u + d u(t-tau) + f
struct NeutralFamily {
    double mu = 1.0;
    double c = 0.0;
    double r = 0.0;
    double d = 0.0;
};

using Family = std::variant<ParabolicFamily, WaveFamily, NeutralFamily>;

using SpaceTimeFn = std::function<double(double x, double t)>;
using TimeFn = std::function<double(double t)>;

/// One delay PDE on (x_min, x_max) x (0, T] with history on [-tau, 0].
///
/// The history function must be evaluable slightly beyond the domain (one dx
/// on either side); the neutral family's delayed diffusion reads it there
/// when a Neumann condition sits on an interface.
struct DelayProblem {
    Family family;
    double tau = 0.0;
    double x_min = 0.0;
    double x_max = 0.0;
    double t_end = 0.0;
    SpaceTimeFn history;     ///< u(x,t) on t in [-tau, 0]
    SpaceTimeFn forcing;     ///< f(x,t)
    TimeFn boundary_left;    ///< Dirichlet value at x_min
    TimeFn boundary_right;   ///< Dirichlet value at x_max

    /// Homogeneous problem: zero history, forcing and boundary data. The
    /// interface guess is then the only data, and the iterates are the
    /// interface errors themselves.
    static DelayProblem error_equation(Family family, double tau, double x_min, double x_max,
                                       double t_end);

    /// Checks coefficient constraints (a2 != 0, nu/c/mu > 0, tau > 0).
    /// Throws ValidationError on violation.
    void validate() const;

    bool is_wave() const { return std::holds_alternative<WaveFamily>(family); }
    bool is_neutral() const { return std::holds_alternative<NeutralFamily>(family); }
    bool is_parabolic() const { return std::holds_alternative<ParabolicFamily>(family); }
};

} // namespace delaydd
