#pragma once

#include <numbers>

namespace polariton2d {

/// Speed of light in cm/ps.
inline constexpr double kSpeedOfLight = 0.0299792458;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Converts a wavenumber (cm^-1) to an angular frequency or rate (rad/ps).
/// Frequencies and decay rates share the same 2*pi*c factor.
constexpr double wavenumber_to_angular(double nu) { return kTwoPi * kSpeedOfLight * nu; }

constexpr double angular_to_wavenumber(double omega) { return omega / (kTwoPi * kSpeedOfLight); }

/// How "n inverse rates" delay labels are translated to picoseconds.
/// `angular` is what the propagator uses; `ordinary` drops the 2*pi and is
/// only offered for labelling.
enum class DelayConvention { angular, ordinary };

/// Duration in ps of one inverse rate 1/rate for a rate given in cm^-1.
double inverse_rate_ps(double rate_cm1, DelayConvention convention);

/// Normalized Gaussian envelope (2 pi tau_w^2)^(-1/2) exp(-t^2 / (2 tau_w^2)), in ps^-1.
/// Throws std::invalid_argument when tau_w <= 0.
double pulse_envelope(double t, double tau_w);

/// Continuous Fourier transform of pulse_envelope under the e^{+i omega t}
/// convention: exp(-omega^2 tau_w^2 / 2). omega in rad/ps.
double pulse_spectrum(double omega_offset, double tau_w);

}  // namespace polariton2d
