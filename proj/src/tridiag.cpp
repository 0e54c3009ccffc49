#include "delaydd/tridiag.hpp"

#include <cmath>
#include <string>

#include "delaydd/errors.hpp"

namespace delaydd {

std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                 std::span<const double> sup, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (n == 0 || sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n)
        throw LengthMismatch("thomas_solve: inconsistent band lengths");

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> r(rhs.begin(), rhs.end());

    for (std::size_t k = 1; k < n; ++k) {
        if (std::abs(d[k - 1]) < 1e-300)
            throw ZeroPivot("thomas_solve: pivot underflow at row " + std::to_string(k - 1));
        const double w = sub[k - 1] / d[k - 1];
        d[k] -= w * sup[k - 1];
        r[k] -= w * r[k - 1];
    }
    if (std::abs(d[n - 1]) < 1e-300)
        throw ZeroPivot("thomas_solve: pivot underflow at last row");

    std::vector<double> x(n);
    x[n - 1] = r[n - 1] / d[n - 1];
    for (std::size_t k = n - 1; k-- > 0;)
        x[k] = (r[k] - sup[k] * x[k + 1]) / d[k];
    return x;
}

} // namespace delaydd
