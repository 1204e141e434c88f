#ifndef ACCELRAD_DISPERSION_HPP
#define ACCELRAD_DISPERSION_HPP

#include <cmath>
#include <utility>

#include "accelrad/errors.hpp"
#include "accelrad/polarizability.hpp"
#include "accelrad/constants.hpp"
#include "accelrad/quadrature.hpp"

namespace accelrad {

// Dispersion (van der Waals / Casimir-Polder) energy between two
// ground-state atoms on parallel hyperbolic worldlines, natural units
// ħ = c = 1. The energy is the rest-atom potential plus two
// acceleration corrections, one ∝ a²t and one ∝ a²t².

struct DispersionResult {
    double rest_term = 0.0;
    double correction_a2t = 0.0;
    double correction_a2t2 = 0.0;
    double total = 0.0;
    double quadrature_error = 0.0;
};

enum class Zone { Near, Intermediate, Far };

struct ZoneClassification {
    Zone zone = Zone::Intermediate;
    double ratio = 0.0; // R / λ
};

/// Near iff R/λ < near_threshold, Far iff R/λ > far_threshold.
/// λ = 1/ω₀ with ω₀ the smaller of the two transition frequencies.
inline ZoneClassification classify_zone(double R, double omega0,
                                        double near_threshold = 1e-2,
                                        double far_threshold = 1e2) {
    ZoneClassification zc;
    zc.ratio = R * omega0;
    if (zc.ratio < near_threshold) zc.zone = Zone::Near;
    else if (zc.ratio > far_threshold) zc.zone = Zone::Far;
    return zc;
}

namespace detail {

/// ∫₀^∞ g(u) α_A(iu) α_B(iu) e^{-2uR} du via the exponential
/// substitution u = -ln(s)/(2R), which maps the integral to
/// (1/2R) ∫₀¹ g(u(s)) α_A α_B ds.
template <typename G>
QuadratureResult dispersion_u_integral(const G& g, const AtomDescriptor& A,
                                       const AtomDescriptor& B, double R,
                                       double rel_tol) {
    const auto integrand = [&](double s) {
        if (s <= 0.0 || s >= 1.0) return 0.0; // endpoint guard; measure-zero
        const double u = -std::log(s) / (2.0 * R);
        return g(u) * alpha_iu(A.polarizability, u) * alpha_iu(B.polarizability, u);
    };
    // pilot pass sets the absolute tolerance scale
    double pilot, perr;
    gk15_panel(integrand, 0.0, 1.0, pilot, perr);
    const double tol = std::max(rel_tol * std::abs(pilot), 1e-300);
    QuadratureResult q = integrate_adaptive(integrand, 0.0, 1.0, tol,
                                            {1e-6, 1e-3, 0.1, 0.5, 0.9});
    q.value /= 2.0 * R;
    q.error /= 2.0 * R;
    return q;
}

} // namespace detail

/// Rest-atom Casimir-Polder energy
///   ΔE^r = -(1/πR²) ∫₀^∞ α_A α_B u⁴ e^{-2uR}
///            [1 + 2/(uR) + 5/(uR)² + 6/(uR)³ + 3/(uR)⁴] du,
/// attractive for positive polarizabilities. Static α gives exactly
/// -23 α₀ᴬ α₀ᴮ / (4πR⁷).
inline DispersionResult rest_cp_energy_result(const AtomDescriptor& A,
                                              const AtomDescriptor& B, double R,
                                              double rel_tol = 1e-12) {
    if (R <= 0.0) throw std::domain_error("rest_cp_energy: R must be positive");
    const auto kernel = [R](double u) {
        const double u2 = u * u;
        return u2 * u2 + 2.0 * u2 * u / R + 5.0 * u2 / (R * R) +
               6.0 * u / (R * R * R) + 3.0 / (R * R * R * R);
    };
    const QuadratureResult q = detail::dispersion_u_integral(kernel, A, B, R, rel_tol);
    const double pref = -1.0 / (constants::pi * R * R);
    DispersionResult res;
    res.rest_term = pref * q.value;
    res.total = res.rest_term;
    res.quadrature_error = std::abs(pref) * q.error;
    return res;
}

inline double rest_cp_energy(const AtomDescriptor& A, const AtomDescriptor& B,
                             double R, double rel_tol = 1e-12) {
    return rest_cp_energy_result(A, B, R, rel_tol).rest_term;
}

/// The two acceleration corrections of the accelerated dispersion energy,
/// returned separately as (a²t term, a²t² term). Natural units; requires
/// |a t| ≤ 0.3 (nonrelativistic expansion).
inline std::pair<double, double> accel_corrections(const AtomDescriptor& A,
                                                   const AtomDescriptor& B,
                                                   double R, double a, double t,
                                                   double rel_tol = 1e-12,
                                                   double* quad_error = nullptr) {
    if (R <= 0.0) throw std::domain_error("accel_corrections: R must be positive");
    if (a < 0.0) throw std::domain_error("accel_corrections: a must be nonnegative");
    if (t < 0.0) throw std::domain_error("accel_corrections: t must be nonnegative");
    if (std::abs(a * t) > 0.3)
        throw regime_error("accel_corrections: |a t| > 0.3, outside the "
                           "nonrelativistic validity regime");
    if (quad_error) *quad_error = 0.0;
    if (a == 0.0 || t == 0.0) return {0.0, 0.0};

    const auto kernel1 = [R](double u) {
        return 3.0 * u * u + 4.0 * u / R + 2.0 / (R * R);
    };
    const auto kernel2 = [R](double u) {
        const double u2 = u * u;
        return -u2 * u2 + 4.0 * u2 * u / R + 8.0 * u2 / (R * R) +
               8.0 * u / (R * R * R) + 4.0 / (R * R * R * R);
    };
    const QuadratureResult q1 = detail::dispersion_u_integral(kernel1, A, B, R, rel_tol);
    const QuadratureResult q2 = detail::dispersion_u_integral(kernel2, A, B, R, rel_tol);
    const double pref1 = a * a * t / (2.0 * constants::pi * R * R * R);
    const double pref2 = a * a * t * t / (6.0 * constants::pi * R * R);
    if (quad_error)
        *quad_error = std::abs(pref1) * q1.error + std::abs(pref2) * q2.error;
    return {pref1 * q1.value, pref2 * q2.value};
}

/// Full accelerated dispersion energy: rest term plus both corrections.
inline DispersionResult total_dispersion(const AtomDescriptor& A,
                                         const AtomDescriptor& B, double R,
                                         double a, double t,
                                         double rel_tol = 1e-12) {
    DispersionResult res = rest_cp_energy_result(A, B, R, rel_tol);
    double cerr = 0.0;
    const auto [c1, c2] = accel_corrections(A, B, R, a, t, rel_tol, &cerr);
    res.correction_a2t = c1;
    res.correction_a2t2 = c2;
    res.total = res.rest_term + c1 + c2;
    res.quadrature_error += cerr;
    return res;
}

} // namespace accelrad

#endif
