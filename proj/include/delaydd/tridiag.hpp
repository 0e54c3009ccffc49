#pragma once

#include <span>
#include <vector>

namespace delaydd {

/// Thomas algorithm for a tridiagonal system.
///
/// sub and sup have length n-1, diag and rhs length n. Throws ZeroPivot if a
/// pivot magnitude falls below 1e-300. Intended for the diagonally dominant
/// systems produced by the implicit schemes here.
std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                 std::span<const double> sup, std::span<const double> rhs);

} // namespace delaydd
