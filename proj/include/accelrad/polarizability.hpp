#ifndef ACCELRAD_POLARIZABILITY_HPP
#define ACCELRAD_POLARIZABILITY_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace accelrad {

/// Dynamic polarizability evaluated on the imaginary frequency axis.
/// Values carry length³ (Gaussian convention); in natural units ħ=c=1
/// the argument u is an inverse length.
class PolarizabilityModel {
  public:
    enum class Kind { Static, SingleResonance };

    static PolarizabilityModel make_static(double alpha0) {
        check(alpha0);
        PolarizabilityModel m;
        m.kind_ = Kind::Static;
        m.alpha0_ = alpha0;
        return m;
    }

    /// One-pole model α(iu) = α₀ / (1 + (u/ω₀)²), ω₀ in natural units.
    static PolarizabilityModel make_single_resonance(double alpha0, double omega0) {
        check(alpha0);
        if (omega0 <= 0.0)
            throw std::domain_error("PolarizabilityModel: omega0 must be positive");
        PolarizabilityModel m;
        m.kind_ = Kind::SingleResonance;
        m.alpha0_ = alpha0;
        m.omega0_ = omega0;
        return m;
    }

    Kind kind() const { return kind_; }
    double alpha0() const { return alpha0_; }
    double omega0() const { return omega0_; }

    /// α(iu) for u ≥ 0; real, positive, ≤ α₀, nonincreasing in u.
    double at_imaginary_frequency(double u) const {
        if (u < 0.0)
            throw std::domain_error("alpha(iu): u must be nonnegative");
        if (kind_ == Kind::Static) return alpha0_;
        const double x = u / omega0_;
        return alpha0_ / (1.0 + x * x);
    }

  private:
    static void check(double alpha0) {
        if (alpha0 < 0.0)
            throw std::domain_error("PolarizabilityModel: alpha0 must be nonnegative");
    }

    Kind kind_ = Kind::Static;
    double alpha0_ = 0.0;
    double omega0_ = 1.0;
};

inline double alpha_iu(const PolarizabilityModel& m, double u) {
    return m.at_imaginary_frequency(u);
}

/// Two-level atom: transition frequency, real dipole matrix element
/// vector, polarizability model. Natural units (ω₀ is an inverse length,
/// λ = 1/ω₀ the reduced transition wavelength).
struct AtomDescriptor {
    double omega0 = 1.0;
    std::array<double, 3> mu_eg{0.0, 0.0, 0.0};
    PolarizabilityModel polarizability = PolarizabilityModel::make_static(1.0);

    double reduced_wavelength() const { return 1.0 / omega0; }

    void validate() const {
        if (omega0 <= 0.0)
            throw std::domain_error("AtomDescriptor: omega0 must be positive");
    }
};

} // namespace accelrad

#endif
