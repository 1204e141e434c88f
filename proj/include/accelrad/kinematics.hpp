#ifndef ACCELRAD_KINEMATICS_HPP
#define ACCELRAD_KINEMATICS_HPP

#include <cmath>
#include <stdexcept>

#include "accelrad/errors.hpp"

namespace accelrad {

// Natural units throughout (c = 1): accelerations are inverse lengths,
// times are lengths.

struct SpacetimeEvent {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Trajectory in Rindler coordinates (τ, ξ, y, z): the two-atom
/// configuration sits at ξ = y = 0 with constant z.
struct RindlerCoordinates {
    double tau = 0.0;
    double xi = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Hyperbolic worldline of constant proper acceleration a along x,
/// offset transversely in z:
///   t(τ) = (1/a) sinh(aτ),  x(τ) = (1/a) cosh(aτ),  y = 0,  z = z_offset.
struct HyperbolicTrajectory {
    double a = 1.0;
    double z_offset = 0.0;

    SpacetimeEvent point(double tau) const {
        if (a <= 0.0)
            throw std::domain_error("HyperbolicTrajectory: a must be positive");
        return {std::sinh(a * tau) / a, std::cosh(a * tau) / a, 0.0, z_offset};
    }

    RindlerCoordinates rindler_view(double tau) const {
        return {tau, 0.0, 0.0, z_offset};
    }
};

inline SpacetimeEvent trajectory_point(const HyperbolicTrajectory& traj, double tau) {
    return traj.point(tau);
}

/// γ(t) = sqrt(1 + (a t)²) on the hyperbolic worldline; equals
/// cosh(aτ) = dt/dτ at the corresponding proper time.
inline double lorentz_gamma(double a, double t) {
    if (a < 0.0) throw std::domain_error("lorentz_gamma: a must be nonnegative");
    const double at = a * t;
    return std::sqrt(1.0 + at * at);
}

struct EffectiveDistanceResult {
    double rho = 0.0;
    bool regime_warning = false; // |a t| > 0.3, nonrelativistic expansion invalid
    int iterations = 0;
};

/// Effective photon path length ρ between two hyperbolic worldlines with
/// the same acceleration a, separated transversely by R, for a null
/// interval centered at lab time t (emission at t - ρ/2, reception at
/// t + ρ/2 on the partner worldline). Reduces exactly to R at a = 0 and
/// at t = 0; even in t; monotone nondecreasing in |t|.
inline EffectiveDistanceResult effective_distance(double R, double a, double t,
                                                  double rel_tol = 1e-12) {
    if (R <= 0.0) throw std::domain_error("effective_distance: R must be positive");
    if (a < 0.0) throw std::domain_error("effective_distance: a must be nonnegative");

    EffectiveDistanceResult res;
    res.regime_warning = std::abs(a * t) > 0.3;
    if (a == 0.0 || t == 0.0) {
        res.rho = R;
        return res;
    }

    // Longitudinal drift between emission and reception points:
    //   Δx(ρ) = x(t + ρ/2) - x(t - ρ/2) = 2 t ρ a / (g(t+ρ/2) + g(t-ρ/2)),
    //   g(s) = sqrt(1 + (a s)²)
    // written in cancellation-free form. Root of
    //   f(ρ) = ρ² - Δx(ρ)² - R².
    const auto drift = [&](double rho) {
        const double u = t + 0.5 * rho;
        const double v = t - 0.5 * rho;
        const double gu = std::sqrt(1.0 + a * u * a * u);
        const double gv = std::sqrt(1.0 + a * v * a * v);
        return 2.0 * t * rho * a / (gu + gv);
    };
    const auto f = [&](double rho) {
        const double dx = drift(rho);
        return rho * rho - dx * dx - R * R;
    };

    double lo = 0.0, hi = R;
    int it = 0;
    while (f(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++it > 200)
            throw convergence_error("effective_distance: no bracketing interval");
    }
    while (hi - lo > rel_tol * hi && it < 200) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
        ++it;
    }
    double rho = 0.5 * (lo + hi);
    // fixed-point polish: ρ = sqrt(R² + Δx(ρ)²)
    for (int k = 0; k < 4; ++k) {
        const double dx = drift(rho);
        rho = std::sqrt(R * R + dx * dx);
    }
    if (it >= 200)
        throw convergence_error("effective_distance: bisection did not converge");
    res.rho = rho;
    res.iterations = it;
    return res;
}

} // namespace accelrad

#endif
