#pragma once

#include <vector>

namespace pnapsac::solvers {

// Real roots of c3*x^3 + c2*x^2 + c1*x + c0 = 0, ascending, Newton-polished,
// with roots closer than 1e-9 (relative) merged. Degenerate leading
// coefficients fall back to the quadratic/linear case.
std::vector<double> solve_cubic_real(double c3, double c2, double c1,
                                     double c0);

}  // namespace pnapsac::solvers
