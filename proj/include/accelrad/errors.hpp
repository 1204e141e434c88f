#ifndef ACCELRAD_ERRORS_HPP
#define ACCELRAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace accelrad {

/// Quadrature or extrapolation failed to reach the requested tolerance.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& msg, double achieved = 0.0)
        : std::runtime_error(msg), achieved_error_(achieved) {}
    double achieved_error() const { return achieved_error_; }

  private:
    double achieved_error_;
};

/// Input outside the validity regime of the underlying expansion.
class regime_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Dipole/geometry configuration not admitted by the requested operation.
class configuration_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Proper-time integration window too small for the requested geometry.
class window_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Power-law fit is undefined for the supplied samples.
class fit_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace accelrad

#endif
