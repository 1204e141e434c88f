#ifndef ACCELRAD_POWER_FIT_HPP
#define ACCELRAD_POWER_FIT_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "accelrad/errors.hpp"

namespace accelrad {

struct PowerFit {
    double exponent = 0.0;
    double stderr_exponent = 0.0;
    double log_prefactor = 0.0; // intercept of log|E| vs log R
    std::size_t n_used = 0;
};

/// Least-squares slope of log|E| against log R over samples whose R falls
/// inside [window_min, window_max]. Requires at least 8 in-window samples
/// of a single sign (a power law is undefined across zero crossings).
inline PowerFit fit_scaling_exponent(const std::vector<std::pair<double, double>>& samples,
                                     double window_min, double window_max) {
    std::vector<double> lx, ly;
    int sign = 0;
    for (const auto& [r, e] : samples) {
        if (r < window_min || r > window_max) continue;
        if (e == 0.0) throw fit_error("fit_scaling_exponent: zero energy in window");
        const int s = e > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign)
            throw fit_error("fit_scaling_exponent: mixed-sign energies in window");
        lx.push_back(std::log(r));
        ly.push_back(std::log(std::abs(e)));
    }
    const std::size_t n = lx.size();
    if (n < 8)
        throw fit_error("fit_scaling_exponent: fewer than 8 samples in window");

    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += lx[i]; sy += ly[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw fit_error("fit_scaling_exponent: degenerate window");

    PowerFit f;
    f.exponent = sxy / sxx;
    f.log_prefactor = my - f.exponent * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = ly[i] - (f.log_prefactor + f.exponent * lx[i]);
        ss_res += resid * resid;
    }
    f.stderr_exponent = (n > 2) ? std::sqrt(ss_res / ((n - 2) * sxx)) : 0.0;
    f.n_used = n;
    return f;
}

} // namespace accelrad

#endif
