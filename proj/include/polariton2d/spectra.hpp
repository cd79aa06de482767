#pragma once

#include <map>
#include <string>
#include <vector>

#include "polariton2d/config.hpp"
#include "polariton2d/perturbative_engine.hpp"

namespace polariton2d {

/// Complex samples on an increasing frequency axis. `omega` is absolute
/// (cm^-1); `omega_l` is the rotating-frame reference the axis was built from.
struct Spectrum1D {
  std::vector<double> omega;
  std::vector<cplx> values;
  double omega_l = 0.0;
  /// False when the time series had not decayed below 1e-6 of its peak.
  bool decayed = true;

  /// Rotating-frame offset of point i in rad/ps.
  double offset(std::size_t i) const;
};

/// Half-sided transform F(w) = step * sum_k a_k x_k e^{+i w (t0 + k step)} on
/// the zero-padded DFT grid, a_k the apodization weights. Offsets are in
/// rad/ps, increasing, and cover the full DFT band.
struct HalfSidedTransform {
  std::vector<double> omega;
  std::vector<cplx> values;
};

HalfSidedTransform half_sided_transform(const std::vector<cplx>& samples, double t0, double step, int pad_factor,
                                        Apodization apodization);

/// Apodization weight of sample k out of n (1 for `none`; cos^2(pi k / (2 (n-1)))
/// for `half_hann`).
double apodization_weight(Apodization apodization, std::size_t k, std::size_t n);

/// Transform of one component over the detection time, referenced to t_ref
/// (normally t3). Uses round((8 tau_w + window) / dt_sample) samples starting
/// at the first sample at or after t_ref - 8 tau_w, so the frequency grid does
/// not depend on the pulse delays. The result is cropped to omega_l +- half_band
/// (cm^-1). Throws std::invalid_argument when the trajectory is too short.
Spectrum1D detection_spectrum(const Trajectory& traj, Slot slot, double t_ref, double tau_w, double window_ps,
                              int pad_factor, Apodization apodization, double half_band);

/// Same transform for an arbitrary uniformly sampled series.
Spectrum1D detection_spectrum(const std::vector<cplx>& series, double t0, double dt_sample, double omega_l,
                              double t_ref, double tau_w, double window_ps, int pad_factor, Apodization apodization,
                              double half_band);

struct DifferentialTransmission {
  std::vector<double> omega;
  /// Pump-on minus pump-off, real by construction.
  std::vector<double> dT;
  /// Complex heterodyne signal whose real part is dT.
  std::vector<cplx> signal;
  /// True where the probe spectrum fell below mask_eps and dT was set to 0.
  std::vector<bool> masked;
};

/// dT = (kappa/2)^2 eta1 eta2 2 Re[conj(a1) a3] / f3^2 from per-unit-drive
/// probe and third-order spectra. kappa in cm^-1 (converted internally).
/// Throws std::invalid_argument when the grids differ.
DifferentialTransmission differential_transmission(const Spectrum1D& alpha1_probe, const Spectrum1D& alpha3,
                                                   double tau_w, double kappa, double eta1, double eta2,
                                                   double mask_eps);

/// Probe-only transmission (kappa/2)^2 |a1|^2 / f3^2, zero where masked.
std::vector<double> linear_transmission(const Spectrum1D& alpha1_probe, double tau_w, double kappa, double mask_eps);

/// Closed-form first-order cavity field per unit drive,
/// -f(w) / [kappa/2 - i(w + d_c) + g^2 / (gamma_ge/2 - i(w + d_ge))], on the
/// absolute grid `omega`.
std::vector<cplx> linear_response(const std::vector<double>& omega, const SystemParams& params, double omega_l,
                                  double tau_w);

enum class SpectrumKind { linear, pump_probe_1d, oneq_nr, oneq_r, oneq_sum, twoqc };

std::string_view to_string(SpectrumKind kind);

/// 1D or 2D complex grid. For 2D grids axis_a is the excitation axis (w1 or
/// w2), axis_b the detection axis w3, and values are row-major [a][b].
/// For 1D grids axis_b is empty.
struct SpectrumGrid {
  SpectrumKind kind = SpectrumKind::linear;
  std::string label;
  std::vector<double> axis_a;
  std::vector<double> axis_b;
  std::vector<cplx> values;
  std::map<std::string, std::string> metadata;

  bool is_2d() const { return !axis_b.empty(); }
  std::size_t cols() const { return is_2d() ? axis_b.size() : 1; }
  cplx at(std::size_t a, std::size_t b = 0) const { return values[a * cols() + b]; }
  double max_abs_real() const;
  /// Copy divided by max |Re| (unchanged when that is zero).
  SpectrumGrid normalized() const;
  /// Index (a, b) of the largest |Re|.
  std::pair<std::size_t, std::size_t> argmax_abs_real() const;
};

/// Per-delay rows S(delay_k, w3) assembled into a 2D grid by a half-sided
/// transform over the delay axis with kernel e^{+i w delay}. `axis_center` is
/// the absolute frequency (cm^-1) of zero offset: omega_l for the excitation
/// axis, 2 omega_l for the double-quantum axis; the axis is cropped to
/// axis_center +- half_band. Delays must be uniform. Sets metadata
/// "delay_decayed" from the last row relative to the largest row.
SpectrumGrid ft_delay(const std::vector<std::vector<cplx>>& rows, const std::vector<double>& delays,
                      const std::vector<double>& omega3, double axis_center, double half_band, int pad_factor,
                      Apodization apodization, SpectrumKind kind);

/// Transform over tau at fixed T (1Q). Rephasing rows must already be conjugated.
SpectrumGrid ft_excitation(const std::vector<std::vector<cplx>>& rows, const std::vector<double>& tau,
                           const std::vector<double>& omega3, double omega_l, double half_band, int pad_factor,
                           Apodization apodization, SpectrumKind kind);

/// Transform over T at fixed tau (2QC), double-quantum axis around 2 omega_l.
SpectrumGrid ft_waiting(const std::vector<std::vector<cplx>>& rows, const std::vector<double>& T,
                        const std::vector<double>& omega3, double omega_l, double half_band, int pad_factor,
                        Apodization apodization);

struct PolaritonFrequencies {
  double omega_lp = 0.0;
  double omega_up = 0.0;
  double gamma_lp = 0.0;  // half-widths
  double gamma_up = 0.0;
};

/// Eigenvalues lambda of [[i d_c - kappa/2, -i g], [-i g, i d_ge - gamma_ge/2]]
/// mapped to omega_l - Im(lambda) and -Re(lambda), in cm^-1. Throws
/// std::domain_error when the two eigenvalues coincide.
PolaritonFrequencies polariton_frequencies(const SystemParams& params);

struct StationaryContributions {
  std::vector<double> omega;
  std::vector<cplx> alpha1;
  std::vector<cplx> gsb_se;
  std::vector<cplx> esa;
  /// Transfer per unit [conj(alpha1) * rho_fg] source, rho_fg per molecule.
  std::vector<cplx> dqc;
};

/// Third-order cavity field for a constant single-molecule excited-state
/// population rho_ee (engine ee / relative_molecule_count()), split into pathways, in the same units as detection_spectrum of the
/// per-unit-drive engine fields.
StationaryContributions stationary_contributions(const std::vector<double>& omega, double rho_ee,
                                                 const SystemParams& params, double omega_l, double tau_w,
                                                 const PathwayMask& mask = {});

/// Frequency of the largest value of `y` on `x` (no interpolation).
double argmax_location(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace polariton2d
