#pragma once

#include <optional>

#include "casimir/units.hpp"

namespace casimir {

/// eps(i xi). An ideal metal is reported through the flag, never as a
/// floating-point infinity.
struct Permittivity {
    bool infinite;
    double value;  // meaningful only when !infinite
};

Permittivity permittivity(const MaterialModel& m, double xi);

/// Squared reflection coefficients in the dimensionless variables
/// x = 2 a xi / c, y = 2 a q (y >= x >= 0).
struct ReflectionSq {
    double par;
    double perp;
};

ReflectionSq reflection_sq(const MaterialModel& m, double a, double x, double y);

/// Diagonal scattering coefficients in the renormalised form
/// s = [r^-2 - e^{-2 a q}]^-1 = r^2 / (1 - r^2 e^{-2 a q}),
/// whose -ln is the free-energy summand. xi = 0 dispatches to the
/// model's zero-frequency limit.
struct ScatteringS11 {
    double par;
    double perp;
};

ScatteringS11 scattering_s11(const MaterialModel& m, double a, double xi, double k_perp);

enum class ZeroFrequencyClass {
    PlasmaWellPosed,
    DielectricWellPosed,
    DrudeIndeterminate,
    IdealByPrescriptionOnly,
};

/// Classification of the xi -> 0 limit of the scattering problem.
struct ZeroFrequencyReport {
    ZeroFrequencyClass classification;
    bool xi2_eps_limit_infinite;       // ideal metal
    double xi2_eps_limit;              // lim xi^2 eps(i xi), (rad/s)^2
    bool q0_equals_k0;
    double par_limit;                  // s11 parallel limit
    std::optional<double> perp_limit;  // nullopt = indeterminate (Drude)
};

ZeroFrequencyReport zero_frequency_report(const MaterialModel& m, double a, double k_perp);

} // namespace casimir
