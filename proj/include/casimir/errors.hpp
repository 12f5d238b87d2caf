#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Model cannot provide a well-defined value for the requested quantity
/// (notably any finite-temperature force with the Drude model, whose
/// perpendicular zero-frequency scattering coefficient is indeterminate).
class indeterminate_model_error : public std::domain_error {
public:
    explicit indeterminate_model_error(const std::string& what)
        : std::domain_error(what) {}
};

/// Operation does not apply to this material model at all
/// (e.g. penetration depth of an ideal metal).
class unsupported_model_error : public std::domain_error {
public:
    explicit unsupported_model_error(const std::string& what)
        : std::domain_error(what) {}
};

/// Quadrature or series summation failed to converge within budget.
class nonconvergence_error : public std::runtime_error {
public:
    nonconvergence_error(const std::string& what, double best, double err_est)
        : std::runtime_error(what), best_value(best), error_estimate(err_est) {}
    double best_value;
    double error_estimate;
};

} // namespace casimir
