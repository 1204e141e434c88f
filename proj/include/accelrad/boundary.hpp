#ifndef ACCELRAD_BOUNDARY_HPP
#define ACCELRAD_BOUNDARY_HPP

#include <array>
#include <cmath>
#include <vector>

#include "accelrad/resonance.hpp"

namespace accelrad {

// Resonance interaction near a perfectly reflecting plate at z = 0,
// atoms at z and z + L accelerating along x (parallel to the plate).
// The plate contribution is reconstructed with the image-dipole method:
// positions reflected through the plate, tangential dipole components
// negated, normal component preserved.

struct MirrorGeometry {
    double z_atom_A = 1.0; // distance of the lower atom from the plate
    double separation_L = 1.0;

    double z_atom_B() const { return z_atom_A + separation_L; }
    double r_bar() const { return separation_L + 2.0 * z_atom_A; }

    void validate() const {
        if (z_atom_A <= 0.0 || separation_L <= 0.0)
            throw std::domain_error("MirrorGeometry: need z > 0 and L > 0");
    }
};

/// Perfect-conductor image of a dipole at height z:
/// position z -> -z, dipole (μx, μy, μz) -> (-μx, -μy, μz).
struct ImageAtom {
    double z = 0.0;
    Vec3 mu{0.0, 0.0, 0.0};

    static ImageAtom reflect(double z, const Vec3& mu) {
        return {-z, {-mu[0], -mu[1], mu[2]}};
    }
};

struct MirrorResonanceResult {
    double total = 0.0;
    double free_part = 0.0;
    double plate_part = 0.0;
    double numerical_error = 0.0;
};

/// Resonance energy near the plate: free-space DDC term at separation L
/// plus the image-mediated term between atom A and the image of atom B
/// (effective separation R̄ = L + 2z, reflected dipole).
inline MirrorResonanceResult mirror_resonance_energy(const DipolePair& pair,
                                                     const CorrelatedState& state,
                                                     const MirrorGeometry& geom,
                                                     double omega0, double a,
                                                     const DdcKernelParams& params = {}) {
    geom.validate();
    const double sign = state.sign();

    const ResonanceResult free_r = detail::ddc_energy_general(
        pair.mu_A, geom.z_atom_A, pair.mu_B, geom.z_atom_B(), sign, omega0, a,
        params);

    const ImageAtom imgB = ImageAtom::reflect(geom.z_atom_B(), pair.mu_B);
    const ResonanceResult plate_r = detail::ddc_energy_general(
        pair.mu_A, geom.z_atom_A, imgB.mu, imgB.z, sign, omega0, a, params);

    MirrorResonanceResult res;
    res.free_part = free_r.energy;
    res.plate_part = plate_r.energy;
    res.total = res.free_part + res.plate_part;
    res.numerical_error = free_r.numerical_error + plate_r.numerical_error;
    return res;
}

struct OrientationSample {
    int id = 0;
    Vec3 mu_A{0, 0, 0};
    Vec3 mu_B{0, 0, 0};
    MirrorResonanceResult result;
};

struct OrientationScan {
    std::vector<OrientationSample> samples;
    int max_id = 0; // strongest |total| (enhancement)
    int min_id = 0; // weakest |total| (inhibition)
};

/// Dipole orientation grid used when the caller does not supply one:
/// all ordered pairs drawn from the axes {x, y, z} with unit magnitude,
/// plus the three diagonal orientations paired with themselves.
inline std::vector<std::pair<Vec3, Vec3>> default_orientation_grid() {
    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<std::pair<Vec3, Vec3>> grid;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) grid.emplace_back(axes[i], axes[j]);
    const double s = 1.0 / std::sqrt(2.0);
    grid.push_back({{s, 0, s}, {s, 0, s}});
    grid.push_back({{0, s, s}, {0, s, s}});
    grid.push_back({{s, s, 0}, {s, s, 0}});
    return grid;
}

/// Tabulate the mirror resonance energy over a dipole-orientation grid
/// and report the enhancement / inhibition extremes of |total|.
inline OrientationScan orientation_scan(
    const CorrelatedState& state, const MirrorGeometry& geom, double omega0,
    double a, const DdcKernelParams& params = {},
    const std::vector<std::pair<Vec3, Vec3>>& grid = default_orientation_grid()) {
    OrientationScan scan;
    double best = -1.0, worst = -1.0;
    int id = 0;
    for (const auto& [muA, muB] : grid) {
        DipolePair pair;
        pair.mu_A = muA;
        pair.mu_B = muB;
        OrientationSample s;
        s.id = id;
        s.mu_A = muA;
        s.mu_B = muB;
        s.result = mirror_resonance_energy(pair, state, geom, omega0, a, params);
        const double mag = std::abs(s.result.total);
        if (best < 0.0 || mag > best) { best = mag; scan.max_id = id; }
        if (worst < 0.0 || mag < worst) { worst = mag; scan.min_id = id; }
        scan.samples.push_back(s);
        ++id;
    }
    return scan;
}

} // namespace accelrad

#endif
