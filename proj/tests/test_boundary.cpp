#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "accelrad/boundary.hpp"

using namespace accelrad;

namespace {
const CorrelatedState sym{Parity::Symmetric};
const CorrelatedState anti{Parity::Antisymmetric};

DipolePair normal_pair() {
    DipolePair p;
    p.mu_A = {0, 0, 1};
    p.mu_B = {0, 0, 1};
    return p;
}
} // namespace

TEST_CASE("image reflection is an involution") {
    const Vec3 mu{0.3, -0.8, 0.5};
    const ImageAtom img = ImageAtom::reflect(2.0, mu);
    CHECK(img.z == -2.0);
    CHECK(img.mu == Vec3{-0.3, 0.8, 0.5});
    const ImageAtom back = ImageAtom::reflect(img.z, img.mu);
    CHECK(back.z == 2.0);
    CHECK(back.mu == mu);
}

TEST_CASE("geometry validation and derived quantities") {
    MirrorGeometry g{0.5, 2.0};
    CHECK(g.z_atom_B() == 2.5);
    CHECK(g.r_bar() == 3.0);
    CHECK(g.r_bar() > g.separation_L);
    CHECK_THROWS_AS((MirrorGeometry{0.0, 1.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((MirrorGeometry{1.0, -1.0}.validate()), std::domain_error);
}

TEST_CASE("far plate recovers free space") {
    const double w = 1.0, a = 0.3, L = 1.0;
    const MirrorGeometry far_geom{1e3 * L, L};
    const MirrorResonanceResult r =
        mirror_resonance_energy(normal_pair(), sym, far_geom, w, a);
    const ResonanceResult free_r = ddc_resonance_energy(normal_pair(), sym, L, w, a);
    CHECK(std::abs(r.plate_part) < 1e-3 * std::abs(free_r.energy));
    CHECK(r.total == Catch::Approx(free_r.energy).epsilon(1e-3));
}

TEST_CASE("plate part depends on geometry only through R̄") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> zd(0.2, 1.0);
    for (int i = 0; i < 5; ++i) {
        const double z1 = zd(rng);
        const double rbar = 3.0;
        const double L1 = rbar - 2.0 * z1;
        const double z2 = zd(rng) * 0.5;
        const double L2 = rbar - 2.0 * z2;
        REQUIRE(L1 > 0.0);
        REQUIRE(L2 > 0.0);
        const MirrorResonanceResult r1 =
            mirror_resonance_energy(normal_pair(), sym, {z1, L1}, 1.0, 0.4);
        const MirrorResonanceResult r2 =
            mirror_resonance_energy(normal_pair(), sym, {z2, L2}, 1.0, 0.4);
        CHECK(std::abs(r1.plate_part - r2.plate_part) <=
              r1.numerical_error + r2.numerical_error +
                  1e-6 * std::abs(r1.plate_part));
    }
}

TEST_CASE("inertial plate part matches the image closed form") {
    const MirrorGeometry g{0.6, 1.2};
    const MirrorResonanceResult r =
        mirror_resonance_energy(normal_pair(), sym, g, 1.0, 0.0);
    const ImageAtom img = ImageAtom::reflect(g.z_atom_B(), normal_pair().mu_B);
    const double oracle = inertial_resonance_energy_vec(
        normal_pair().mu_A, img.mu, {0.0, 0.0, img.z - g.z_atom_A}, 1.0, 1.0);
    CHECK(r.plate_part == Catch::Approx(oracle).epsilon(1e-3));
    const double free_oracle = inertial_resonance_energy_vec(
        normal_pair().mu_A, normal_pair().mu_B, {0.0, 0.0, g.separation_L}, 1.0, 1.0);
    CHECK(r.total == Catch::Approx(free_oracle + oracle).epsilon(1e-3));
}

TEST_CASE("cross-orientation contribution appears with the plate") {
    DipolePair cross;
    cross.mu_A = {1, 0, 0};
    cross.mu_B = {0, 0, 1};
    // absent when inertial (stationary selection rule), switched on by a
    const double free_e = inertial_resonance_energy(cross, sym, 1.0, 1.0);
    CHECK(free_e == 0.0);
    const MirrorGeometry g{0.4, 1.0};
    const MirrorResonanceResult r0 = mirror_resonance_energy(cross, sym, g, 1.0, 0.0);
    CHECK(r0.plate_part == 0.0);
    const MirrorResonanceResult r = mirror_resonance_energy(cross, sym, g, 1.0, 0.5);
    CHECK(std::abs(r.plate_part) > 10.0 * r.numerical_error);
}

TEST_CASE("orientation scan: parity flip negates the table") {
    const MirrorGeometry g{0.5, 1.0};
    const OrientationScan s_sym = orientation_scan(sym, g, 1.0, 0.3);
    const OrientationScan s_anti = orientation_scan(anti, g, 1.0, 0.3);
    REQUIRE(s_sym.samples.size() == 12);
    for (std::size_t i = 0; i < s_sym.samples.size(); ++i) {
        CHECK(s_anti.samples[i].result.total == -s_sym.samples[i].result.total);
    }
}

TEST_CASE("orientation scan finds enhancement and inhibition") {
    const MirrorGeometry g{0.5, 1.0};
    const OrientationScan scan = orientation_scan(sym, g, 1.0, 0.3);
    bool enhanced = false, inhibited = false;
    for (const auto& s : scan.samples) {
        if (std::abs(s.result.free_part) == 0.0) continue;
        if (std::abs(s.result.total) > std::abs(s.result.free_part)) enhanced = true;
        if (std::abs(s.result.total) < std::abs(s.result.free_part)) inhibited = true;
    }
    CHECK(enhanced);
    CHECK(inhibited);
}
