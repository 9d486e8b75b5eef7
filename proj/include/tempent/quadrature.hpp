#pragma once

#include <cstddef>
#include <functional>

namespace tempent {

/// Numeric integral with the engine's absolute error estimate.
struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b].
///
/// Bisects the interval with the largest |K15 - G7| until the summed estimate
/// drops below max(abs_tol, rel_tol * |value|) or max_intervals is reached.
/// Does not throw on non-convergence; callers inspect err_estimate.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, std::size_t max_intervals = 4000);

}  // namespace tempent
