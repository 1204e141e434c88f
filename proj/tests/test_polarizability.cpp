#include <catch2/catch_amalgamated.hpp>

#include "accelrad/polarizability.hpp"

using namespace accelrad;

TEST_CASE("static model is constant") {
    const auto m = PolarizabilityModel::make_static(1.0);
    for (double u : {0.0, 0.3, 7.0, 1e6}) CHECK(alpha_iu(m, u) == 1.0);
}

TEST_CASE("single resonance static limit and half point") {
    const auto m = PolarizabilityModel::make_single_resonance(2.0, 3.0);
    CHECK(alpha_iu(m, 0.0) == 2.0);
    CHECK(alpha_iu(m, 3.0) == Catch::Approx(1.0).epsilon(1e-15)); // u = ω₀
}

TEST_CASE("alpha is monotone nonincreasing and decays") {
    const auto m = PolarizabilityModel::make_single_resonance(1.0, 2.0);
    double prev = alpha_iu(m, 0.0);
    for (double u = 0.1; u < 50.0; u *= 1.7) {
        const double v = alpha_iu(m, u);
        CHECK(v <= prev);
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
    CHECK(alpha_iu(m, 2.0 * 1001.0) < 1e-6); // u/ω₀ > 1000
}

TEST_CASE("alpha rejects negative u") {
    const auto m = PolarizabilityModel::make_static(1.0);
    CHECK_THROWS_AS(alpha_iu(m, -1.0), std::domain_error);
}

TEST_CASE("model construction validation") {
    CHECK_THROWS_AS(PolarizabilityModel::make_static(-1.0), std::domain_error);
    CHECK_THROWS_AS(PolarizabilityModel::make_single_resonance(1.0, 0.0),
                    std::domain_error);
}

TEST_CASE("atom descriptor wavelength closure") {
    AtomDescriptor atom;
    atom.omega0 = 4.0;
    CHECK(atom.reduced_wavelength() * atom.omega0 == Catch::Approx(1.0));
    atom.omega0 = -1.0;
    CHECK_THROWS_AS(atom.validate(), std::domain_error);
}
