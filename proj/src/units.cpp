#include "polariton2d/units.hpp"

#include <cmath>
#include <stdexcept>

namespace polariton2d {

double inverse_rate_ps(double rate_cm1, DelayConvention convention) {
  if (!(rate_cm1 > 0.0)) throw std::invalid_argument("inverse_rate_ps: rate must be positive");
  const double rate = convention == DelayConvention::angular ? wavenumber_to_angular(rate_cm1)
                                                             : kSpeedOfLight * rate_cm1;
  return 1.0 / rate;
}

double pulse_envelope(double t, double tau_w) {
  if (!(tau_w > 0.0)) throw std::invalid_argument("pulse_envelope: tau_w must be > 0");
  const double x = t / tau_w;
  return std::exp(-0.5 * x * x) / (std::sqrt(kTwoPi) * tau_w);
}

double pulse_spectrum(double omega_offset, double tau_w) {
  const double x = omega_offset * tau_w;
  return std::exp(-0.5 * x * x);
}

}  // namespace polariton2d
