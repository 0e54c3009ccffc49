#pragma once

#include <complex>

namespace delaydd {

enum class WrMethod { dnwr, nnwr };
enum class SymbolFamily { parabolic, wave, neutral };

/// Inputs for one contraction-factor evaluation in the Laplace domain.
/// Only the coefficients of the selected family are read. Requires
/// Re(s) > 0 (right half-plane; principal square-root branch).
struct SymbolQuery {
    WrMethod method = WrMethod::dnwr;
    SymbolFamily family = SymbolFamily::parabolic;
    double a = 1.0;     ///< left subdomain width
    double b = 1.0;     ///< right subdomain width
    double theta = 0.5;
    std::complex<double> s{1.0, 0.0};
    double tau = 1.0;
    // wave
    double c = 1.0;
    double lambda = 0.0;
    // neutral
    double mu = 1.0;
    double neutral_c = 0.0;
    double r = 0.0;
    double d = 0.0;
};

/// Per-iteration multiplier of the interface iterate in the Laplace domain:
///
///   DNWR parabolic  1 - 2 theta                       (infinite domain)
///   NNWR parabolic  1 - 4 theta
///   DNWR wave       1 - theta - theta coth(a sig/c) tanh(b sig/c),
///                     sig = sqrt(s^2 - lambda e^{-tau s})
///   NNWR wave       1 - theta (2 + tanh(a sig/c)/tanh(b sig/c)
///                                + tanh(b sig/c)/tanh(a sig/c))
///   DNWR neutral    1 - theta - theta coth(a gam)/coth(b gam),
///                     gam = (1/mu) sqrt((s - r - d e^{-tau s})
///                                       / (1 + c^2 e^{-tau s}))
///   NNWR neutral    1 - theta (2 + coth(a gam)/coth(b gam)
///                                + coth(b gam)/coth(a gam))
///
/// For a = b every factor collapses to 1-2theta (DNWR) or 1-4theta (NNWR),
/// exactly. Throws BranchFailure when Re(s) <= 0.
std::complex<double> contraction_symbol(const SymbolQuery& q);

} // namespace delaydd
