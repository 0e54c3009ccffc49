#include "delaydd/problem.hpp"

#include "delaydd/errors.hpp"

namespace delaydd {

DelayProblem DelayProblem::error_equation(Family family, double tau, double x_min, double x_max,
                                          double t_end) {
    DelayProblem p;
    p.family = family;
    p.tau = tau;
    p.x_min = x_min;
    p.x_max = x_max;
    p.t_end = t_end;
    p.history = [](double, double) { return 0.0; };
    p.forcing = [](double, double) { return 0.0; };
    p.boundary_left = [](double) { return 0.0; };
    p.boundary_right = [](double) { return 0.0; };
    p.validate();
    return p;
}

void DelayProblem::validate() const {
    if (!(tau > 0.0))
        throw ValidationError("DelayProblem: tau must be positive");
    if (!(x_max > x_min))
        throw ValidationError("DelayProblem: empty spatial domain");
    if (!(t_end > 0.0))
        throw ValidationError("DelayProblem: T must be positive");
    if (const auto* par = std::get_if<ParabolicFamily>(&family)) {
        if (par->a2 == 0.0)
            throw ValidationError("ParabolicFamily: a2 must be nonzero");
        if (!(par->nu > 0.0))
            throw ValidationError("ParabolicFamily: nu must be positive");
    } else if (const auto* wav = std::get_if<WaveFamily>(&family)) {
        if (!(wav->c > 0.0))
            throw ValidationError("WaveFamily: c must be positive");
    } else if (const auto* neu = std::get_if<NeutralFamily>(&family)) {
        if (!(neu->mu > 0.0))
            throw ValidationError("NeutralFamily: mu must be positive");
    }
}

} // namespace delaydd
