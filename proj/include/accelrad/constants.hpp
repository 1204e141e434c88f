#ifndef ACCELRAD_CONSTANTS_HPP
#define ACCELRAD_CONSTANTS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace accelrad {

/// CODATA 2018 values, SI. Fixed at build time.
namespace constants {

constexpr double pi = std::numbers::pi_v<double>;

/// ħ — reduced Planck constant [J·s]
constexpr double hbar = 1.054571817e-34;

/// c — speed of light in vacuum [m/s] (exact)
constexpr double c = 299792458.0;

/// k_B — Boltzmann constant [J/K] (exact)
constexpr double k_B = 1.380649e-23;

/// e — elementary charge [C] (exact). Absorbed into dipole matrix
/// elements everywhere in this library; kept for documentation.
constexpr double e = 1.602176634e-19;

} // namespace constants

/// Unruh temperature ħa/(2πck_B) for proper acceleration a [m/s²] -> [K].
inline double unruh_temperature(double a) {
    if (a < 0.0)
        throw std::domain_error("unruh_temperature: acceleration must be nonnegative");
    using namespace constants;
    return hbar * a / (2.0 * pi * c * k_B);
}

/// Rindler reference length z_a = c²/a for a > 0 [m/s²] -> [m].
/// Separations z ≪ z_a behave thermal-like, z ≫ z_a nonthermal.
inline double rindler_length(double a) {
    if (a <= 0.0)
        throw std::domain_error("rindler_length: acceleration must be positive");
    return constants::c * constants::c / a;
}

enum class AccelerationRegime { ThermalLike, Crossover, Nonthermal };

/// Classify a separation z against the Rindler length c²/a.
/// The crossover band is [lo, hi] in az/c² (defaults one decade each side).
inline AccelerationRegime classify_regime(double z, double a, double lo = 0.1,
                                          double hi = 10.0) {
    const double ratio = a * z / (constants::c * constants::c);
    if (ratio < lo) return AccelerationRegime::ThermalLike;
    if (ratio > hi) return AccelerationRegime::Nonthermal;
    return AccelerationRegime::Crossover;
}

} // namespace accelrad

#endif
