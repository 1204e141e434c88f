#ifndef ACCELRAD_UNITS_HPP
#define ACCELRAD_UNITS_HPP

#include <stdexcept>
#include <string>

#include "accelrad/constants.hpp"

namespace accelrad {

enum class UnitMode { NaturalHbarC1, SI };

/// Conversion between SI and internal natural units (ħ = c = 1).
///
/// In natural mode everything is expressed in powers of one length unit:
/// lengths in units of length_scale [m], times as length/c, inverse
/// lengths for frequencies and accelerations, and energies in units of
/// ħc/length_scale. All physics kernels in this library take
/// natural-unit quantities; SI appears only at the CLI boundary.
class UnitSystem {
  public:
    explicit UnitSystem(UnitMode mode, double length_scale = 1.0)
        : mode_(mode), scale_(length_scale) {
        if (scale_ <= 0.0)
            throw std::domain_error("UnitSystem: length_scale must be positive");
    }

    UnitMode mode() const { return mode_; }
    double length_scale() const { return scale_; }

    // SI -> natural
    double length_to_natural(double m) const { return m / scale_; }
    double time_to_natural(double s) const { return s * constants::c / scale_; }
    double frequency_to_natural(double rad_per_s) const {
        return rad_per_s * scale_ / constants::c;
    }
    double acceleration_to_natural(double m_per_s2) const {
        return m_per_s2 * scale_ / (constants::c * constants::c);
    }
    double energy_to_natural(double joule) const {
        return joule * scale_ / (constants::hbar * constants::c);
    }
    double polarizability_to_natural(double m3) const {
        return m3 / (scale_ * scale_ * scale_);
    }

    // natural -> SI
    double length_to_si(double l) const { return l * scale_; }
    double time_to_si(double t) const { return t * scale_ / constants::c; }
    double frequency_to_si(double w) const { return w * constants::c / scale_; }
    double acceleration_to_si(double a) const {
        return a * constants::c * constants::c / scale_;
    }
    double energy_to_si(double en) const {
        return en * constants::hbar * constants::c / scale_;
    }
    double polarizability_to_si(double al) const {
        return al * scale_ * scale_ * scale_;
    }

  private:
    UnitMode mode_;
    double scale_;
};

inline UnitMode parse_unit_mode(const std::string& s) {
    if (s == "si" || s == "SI") return UnitMode::SI;
    if (s == "natural") return UnitMode::NaturalHbarC1;
    throw std::invalid_argument("unknown unit mode: " + s);
}

} // namespace accelrad

#endif
