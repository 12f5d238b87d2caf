#pragma once

#include <optional>

#include "casimir/errors.hpp"

namespace casimir {

/// Fixed CODATA values, SI units. Everything internal is SI; the CLI converts
/// from eV / micrometre / kelvin at the boundary.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double c_light = 299792458.0;        // m / s
inline constexpr double k_B = 1.380649e-23;           // J / K
inline constexpr double electron_volt = 1.602176634e-19; // J
} // namespace constants

enum class MaterialKind { IdealMetal, Plasma, Drude, Dielectric };

/// Permittivity law on the imaginary frequency axis.
class MaterialModel {
public:
    static MaterialModel ideal_metal();
    static MaterialModel plasma(double omega_p);               // rad/s
    static MaterialModel drude(double omega_p, double gamma);  // rad/s
    static MaterialModel dielectric(double eps0);              // > 1

    MaterialKind kind() const { return kind_; }
    double omega_p() const { return omega_p_; }
    double gamma() const { return gamma_; }
    double eps0() const { return eps0_; }

    bool has_plasma_frequency() const {
        return kind_ == MaterialKind::Plasma || kind_ == MaterialKind::Drude;
    }

private:
    MaterialModel(MaterialKind k, double wp, double g, double e)
        : kind_(k), omega_p_(wp), gamma_(g), eps0_(e) {}
    MaterialKind kind_;
    double omega_p_ = 0.0;
    double gamma_ = 0.0;
    double eps0_ = 0.0;
};

/// Geometry plus thermal state. R present selects the sphere(lens)-plate
/// configuration; the proximity-force treatment requires R >= 100 a.
struct EvaluationPoint {
    double a;                 // separation (mean separation when rough), m
    double T;                 // K
    std::optional<double> R;  // sphere curvature radius, m

    EvaluationPoint(double separation, double temperature,
                    std::optional<double> radius = std::nullopt);

    bool is_sphere() const { return R.has_value(); }
};

struct DimensionlessState {
    double t;            // T_eff / T
    double delta_ratio;  // delta0 / a (0 for an ideal metal)
};

/// k_B T_eff = hbar c / (2a)
double effective_temperature(double a);

/// t = T_eff / T
double reduced_temperature(double a, double T);

/// xi_l = 2 pi l k_B T / hbar
double matsubara_frequency(int l, double T);

/// delta0 = c / omega_p  (plasma or Drude only)
double penetration_depth(const MaterialModel& m);
double penetration_ratio(const MaterialModel& m, double a);
double plasma_wavelength(const MaterialModel& m);  // 2 pi delta0

/// delta_ratio is 0 for an ideal metal; plasma/Drude use delta0/a;
/// a constant dielectric has no penetration-depth scale (throws).
DimensionlessState dimensionless_state(const EvaluationPoint& p, const MaterialModel& m);

} // namespace casimir
