#include <catch2/catch_amalgamated.hpp>

#include "accelrad/constants.hpp"
#include "accelrad/units.hpp"

using namespace accelrad;

TEST_CASE("unruh temperature of terrestrial gravity is of order 1e-20 K") {
    const double T = unruh_temperature(9.8);
    CHECK(T == Catch::Approx(3.97e-20).epsilon(2e-3));
}

TEST_CASE("unruh temperature of zero acceleration is zero") {
    CHECK(unruh_temperature(0.0) == 0.0);
}

TEST_CASE("acceleration producing one kelvin") {
    // invert T_U = ħa/(2πck_B): a = 2πck_B/ħ for T = 1 K
    const double a_one_kelvin = 2.0 * constants::pi * constants::c *
                                constants::k_B / constants::hbar;
    CHECK(a_one_kelvin == Catch::Approx(2.47e20).epsilon(2e-3));
    CHECK(unruh_temperature(a_one_kelvin) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unruh temperature is exactly linear in a") {
    for (double a : {1e-3, 9.8, 1e10, 3e21}) {
        CHECK(unruh_temperature(2.0 * a) == 2.0 * unruh_temperature(a));
    }
}

TEST_CASE("unruh temperature rejects negative acceleration") {
    CHECK_THROWS_AS(unruh_temperature(-1.0), std::domain_error);
}

TEST_CASE("rindler length") {
    CHECK(rindler_length(9.8) == Catch::Approx(9.17e15).epsilon(2e-3));
    CHECK_THROWS_AS(rindler_length(0.0), std::domain_error);
    CHECK_THROWS_AS(rindler_length(-9.8), std::domain_error);
    // a -> infinity limit
    CHECK(rindler_length(1e300) < 1e-280);
    for (double a : {1e-6, 1.0, 1e12}) {
        CHECK(rindler_length(a) * a == Catch::Approx(constants::c * constants::c)
                                           .epsilon(1e-12));
    }
}

TEST_CASE("regime classification") {
    const double c2 = constants::c * constants::c;
    CHECK(classify_regime(1.0, c2) == AccelerationRegime::Crossover); // az/c² = 1
    CHECK(classify_regime(1e-3, c2) == AccelerationRegime::ThermalLike);
    CHECK(classify_regime(1e3, c2) == AccelerationRegime::Nonthermal);
}

TEST_CASE("unit round trips preserve values to 1e-12") {
    const UnitSystem us(UnitMode::SI, 5.2917e-11); // Bohr-radius length scale
    const double vals[] = {1.3e-27, 9.8, 6.0e15, 2.2e-18};
    CHECK(us.length_to_si(us.length_to_natural(vals[0])) ==
          Catch::Approx(vals[0]).epsilon(1e-12));
    CHECK(us.time_to_si(us.time_to_natural(vals[1])) ==
          Catch::Approx(vals[1]).epsilon(1e-12));
    CHECK(us.frequency_to_si(us.frequency_to_natural(vals[2])) ==
          Catch::Approx(vals[2]).epsilon(1e-12));
    CHECK(us.energy_to_si(us.energy_to_natural(vals[3])) ==
          Catch::Approx(vals[3]).epsilon(1e-12));
    CHECK(us.acceleration_to_si(us.acceleration_to_natural(vals[1])) ==
          Catch::Approx(vals[1]).epsilon(1e-12));
    CHECK(us.polarizability_to_si(us.polarizability_to_natural(1.5e-30)) ==
          Catch::Approx(1.5e-30).epsilon(1e-12));
}

TEST_CASE("unit mode parsing") {
    CHECK(parse_unit_mode("si") == UnitMode::SI);
    CHECK(parse_unit_mode("natural") == UnitMode::NaturalHbarC1);
    CHECK_THROWS_AS(parse_unit_mode("imperial"), std::invalid_argument);
}
