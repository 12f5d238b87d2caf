#pragma once

namespace casimir {

/// coth(u) and 1/sinh^2(u) evaluated through exp(-2u) so that both stay
/// finite for u up to ~1e4 (coth -> 1, csch2 underflows to 0 gracefully).
struct HyperbolicKernel {
    double u;
    double coth_val;
    double csch2_val;  // 1 / sinh^2(u)
};

HyperbolicKernel hyperbolic_kernel(double u);

/// Li2(z) for z in [0, 1], <= 1e-14 absolute error.
double dilog(double z);

struct ZetaConstants {
    double zeta3;
    double zeta5;
};

inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta5 = 1.0369277551433699263;

inline ZetaConstants zeta_constants() { return {zeta3, zeta5}; }

} // namespace casimir
