#pragma once

#include <functional>

namespace casimir::quad {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod 7/15 on [a, b]. Deterministic: fixed LIFO
/// subdivision order, local tolerance proportional to interval width.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_subdivisions = 2000);

/// Composite fixed-panel 7-point Gauss-Legendre; n_panels uniform panels.
double gauss7_panels(const std::function<double(double)>& f, double a, double b,
                     int n_panels);

} // namespace casimir::quad
