#pragma once

#include <vector>

namespace delaydd {

/// Norm used for interface error measurements.
enum class Norm {
    sup,      ///< max_t |v(t)|
    l2_in_time ///< sqrt(dt * sum v(t)^2)
};

/// Time series of values (or fluxes) at one interface point, sampled at
/// t = dt, 2dt, ..., T.
struct InterfaceTrace {
    std::vector<double> values;
    double dt = 0.0;

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t k) { return values[k]; }
    double operator[](std::size_t k) const { return values[k]; }

    static InterfaceTrace zeros(int nt, double dt);
};

/// Pointwise relaxation theta*candidate + (1-theta)*prev.
/// Throws LengthMismatch if the traces differ in length.
InterfaceTrace interface_update(const InterfaceTrace& prev, const InterfaceTrace& candidate,
                                double theta);

/// Norm of a trace; l2_in_time uses the trace's dt.
double error_norm(const InterfaceTrace& trace, Norm norm);

/// Pointwise difference a - b (LengthMismatch if lengths differ).
InterfaceTrace trace_difference(const InterfaceTrace& a, const InterfaceTrace& b);

} // namespace delaydd
