#pragma once

#include <functional>
#include <span>

namespace fracdamp::quadrature {

struct Result {
    double value;
    double error;    // estimated absolute error
    int intervals;   // interval evaluations consumed
};

/// Globally adaptive Gauss-Kronrod 7/15 with interval halving: the interval
/// with the largest embedded error estimate is split until the summed error
/// falls below max(abs_tol, rel_tol * |value|). budget counts interval
/// evaluations and is shared across calls; throws QuadratureNonConvergence
/// when it runs out with the estimate still above tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int& budget);

/// Same, with the initial subdivision seeded at the given ascending
/// breakpoints (first = lower limit, last = upper limit).
Result integrate(const std::function<double(double)>& f,
                 std::span<const double> breakpoints,
                 double rel_tol, double abs_tol, int& budget);

}  // namespace fracdamp::quadrature
