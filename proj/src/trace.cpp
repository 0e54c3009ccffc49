#include "delaydd/trace.hpp"

#include <cmath>
#include <string>

#include "delaydd/errors.hpp"

namespace delaydd {

InterfaceTrace InterfaceTrace::zeros(int nt, double dt) {
    InterfaceTrace t;
    t.values.assign(static_cast<std::size_t>(nt), 0.0);
    t.dt = dt;
    return t;
}

InterfaceTrace interface_update(const InterfaceTrace& prev, const InterfaceTrace& candidate,
                                double theta) {
    if (prev.size() != candidate.size())
        throw LengthMismatch("interface_update: traces have lengths " +
                             std::to_string(prev.size()) + " and " +
                             std::to_string(candidate.size()));
    InterfaceTrace out = prev;
    for (std::size_t k = 0; k < out.size(); ++k)
        out.values[k] = theta * candidate.values[k] + (1.0 - theta) * prev.values[k];
    return out;
}

double error_norm(const InterfaceTrace& trace, Norm norm) {
    if (norm == Norm::sup) {
        double m = 0.0;
        for (double v : trace.values)
            m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (double v : trace.values)
        s += v * v;
    return std::sqrt(trace.dt * s);
}

InterfaceTrace trace_difference(const InterfaceTrace& a, const InterfaceTrace& b) {
    if (a.size() != b.size())
        throw LengthMismatch("trace_difference: length mismatch");
    InterfaceTrace out = a;
    for (std::size_t k = 0; k < out.size(); ++k)
        out.values[k] = a.values[k] - b.values[k];
    return out;
}

} // namespace delaydd
