#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "accelrad/power_fit.hpp"

using namespace accelrad;

namespace {
std::vector<std::pair<double, double>> power_law_samples(double C, double p,
                                                         double lo, double hi,
                                                         int n) {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i < n; ++i) {
        const double r = lo * std::pow(hi / lo, double(i) / (n - 1));
        s.emplace_back(r, C * std::pow(r, p));
    }
    return s;
}
} // namespace

TEST_CASE("exact power law is recovered") {
    const auto s = power_law_samples(3.2, -7.0, 0.1, 10.0, 20);
    const PowerFit f = fit_scaling_exponent(s, 0.1, 10.0);
    CHECK(f.exponent == Catch::Approx(-7.0).margin(1e-3));
    CHECK(f.stderr_exponent < 1e-3);
    CHECK(f.n_used == 20);
}

TEST_CASE("negative energies fit through |E|") {
    const auto s = power_law_samples(-1.5, -3.0, 1.0, 100.0, 16);
    const PowerFit f = fit_scaling_exponent(s, 1.0, 100.0);
    CHECK(f.exponent == Catch::Approx(-3.0).margin(1e-6));
}

TEST_CASE("window restricts the samples") {
    auto s = power_law_samples(1.0, -2.0, 0.01, 1.0, 30);
    for (auto& [r, e] : s)
        if (r > 1.0) e = -e; // corrupt out-of-window points only
    const PowerFit f = fit_scaling_exponent(s, 0.01, 1.0);
    CHECK(f.exponent == Catch::Approx(-2.0).margin(1e-6));
}

TEST_CASE("mixed signs in window are rejected") {
    auto s = power_law_samples(1.0, -2.0, 0.1, 10.0, 12);
    s[5].second = -s[5].second;
    CHECK_THROWS_AS(fit_scaling_exponent(s, 0.1, 10.0), fit_error);
}

TEST_CASE("too few samples are rejected") {
    const auto s = power_law_samples(1.0, -2.0, 0.1, 10.0, 7);
    CHECK_THROWS_AS(fit_scaling_exponent(s, 0.1, 10.0), fit_error);
}

TEST_CASE("zero energy in window is rejected") {
    auto s = power_law_samples(1.0, -2.0, 0.1, 10.0, 12);
    s[3].second = 0.0;
    CHECK_THROWS_AS(fit_scaling_exponent(s, 0.1, 10.0), fit_error);
}
