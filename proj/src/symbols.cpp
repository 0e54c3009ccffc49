#include "delaydd/symbols.hpp"

#include <cmath>

#include "delaydd/errors.hpp"

namespace delaydd {

namespace {

using cd = std::complex<double>;

// tanh with an overflow guard: cosh overflows near |Re z| ~ 710, and tanh is
// 1 to double precision well before |z| = 30.
cd guarded_tanh(const cd& z) {
    if (std::abs(z) > 30.0)
        return cd(z.real() >= 0.0 ? 1.0 : -1.0, 0.0);
    return std::tanh(z);
}

} // namespace

std::complex<double> contraction_symbol(const SymbolQuery& q) {
    if (!(q.s.real() > 0.0))
        throw BranchFailure("contraction_symbol: Re(s) must be positive");

    // Both hyperbolic families reduce to the ratio R = tanh(b*g)/tanh(a*g)
    // for the DNWR factor (coth(a g) tanh(b g) and coth(a g)/coth(b g) are
    // the same quantity) and to R + 1/R + 2 for NNWR. Computing the two
    // tanh values once keeps a = b exact: the ratio is exactly one.
    cd ratio;
    switch (q.family) {
    case SymbolFamily::parabolic:
        ratio = cd(1.0, 0.0);
        break;
    case SymbolFamily::wave: {
        const cd sigma = std::sqrt(q.s * q.s - q.lambda * std::exp(-q.tau * q.s));
        const cd ta = guarded_tanh(q.a * sigma / q.c);
        const cd tb = guarded_tanh(q.b * sigma / q.c);
        ratio = tb / ta;
        break;
    }
    case SymbolFamily::neutral: {
        const cd es = std::exp(-q.tau * q.s);
        const cd gamma =
            std::sqrt((q.s - q.r - q.d * es) / (1.0 + q.neutral_c * q.neutral_c * es)) / q.mu;
        const cd ta = guarded_tanh(q.a * gamma);
        const cd tb = guarded_tanh(q.b * gamma);
        ratio = tb / ta;
        break;
    }
    }

    if (q.method == WrMethod::dnwr)
        return 1.0 - q.theta - q.theta * ratio;
    return 1.0 - q.theta * (2.0 + ratio + 1.0 / ratio);
}

} // namespace delaydd
