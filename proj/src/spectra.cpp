#include "polariton2d/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "polariton2d/fft.hpp"
#include "polariton2d/molecular_model.hpp"
#include "polariton2d/units.hpp"

namespace polariton2d {

namespace {

constexpr cplx I{0.0, 1.0};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_same_grid(const Spectrum1D& a, const Spectrum1D& b) {
  if (a.omega.size() != b.omega.size() || a.values.size() != b.values.size()) {
    throw std::invalid_argument("spectra live on different frequency grids");
  }
  for (std::size_t i = 0; i < a.omega.size(); ++i) {
    if (std::abs(a.omega[i] - b.omega[i]) > 1e-9 * std::max(1.0, std::abs(a.omega[i]))) {
      throw std::invalid_argument("spectra live on different frequency grids");
    }
  }
}

}  // namespace

double Spectrum1D::offset(std::size_t i) const { return wavenumber_to_angular(omega[i] - omega_l); }

double apodization_weight(Apodization apodization, std::size_t k, std::size_t n) {
  if (apodization == Apodization::none || n < 2) return 1.0;
  const double c = std::cos(0.5 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1));
  return c * c;
}

HalfSidedTransform half_sided_transform(const std::vector<cplx>& samples, double t0, double step, int pad_factor,
                                        Apodization apodization) {
  if (!(step > 0.0)) throw std::invalid_argument("half_sided_transform: step must be > 0");
  if (pad_factor < 1) throw std::invalid_argument("half_sided_transform: pad_factor must be >= 1");
  const std::size_t n = samples.size();
  const std::size_t N = n * static_cast<std::size_t>(pad_factor);
  HalfSidedTransform out;
  if (n == 0) return out;

  std::vector<cplx> buf(N, cplx{});
  for (std::size_t k = 0; k < n; ++k) buf[k] = samples[k] * apodization_weight(apodization, k, n);
  const auto X = dft_positive(buf);

  out.omega.resize(N);
  out.values.resize(N);
  const auto half = static_cast<std::ptrdiff_t>(N / 2);
  const double dw = kTwoPi / (static_cast<double>(N) * step);
  for (std::size_t i = 0; i < N; ++i) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(i) - half;
    const std::size_t src = static_cast<std::size_t>(m < 0 ? m + static_cast<std::ptrdiff_t>(N) : m);
    const double w = dw * static_cast<double>(m);
    out.omega[i] = w;
    out.values[i] = step * std::polar(1.0, w * t0) * X[src];
  }
  return out;
}

Spectrum1D detection_spectrum(const std::vector<cplx>& series, double t0, double dt_sample, double omega_l,
                              double t_ref, double tau_w, double window_ps, int pad_factor, Apodization apodization,
                              double half_band) {
  if (!(dt_sample > 0.0)) throw std::invalid_argument("detection_spectrum: sample step must be > 0");
  const double t_begin = t_ref - 8.0 * tau_w;
  const double first = std::ceil((t_begin - t0) / dt_sample - 1e-9);
  const auto i0 = static_cast<std::size_t>(std::max(0.0, first));
  const auto n = static_cast<std::size_t>(std::llround((8.0 * tau_w + window_ps) / dt_sample));
  if (n == 0 || i0 + n > series.size()) {
    throw std::invalid_argument("detection_spectrum: trajectory ends before the detection window");
  }
  std::vector<cplx> window(series.begin() + static_cast<std::ptrdiff_t>(i0),
                           series.begin() + static_cast<std::ptrdiff_t>(i0 + n));

  double peak = 0.0;
  for (const auto& v : window) peak = std::max(peak, std::abs(v));

  const double t_first = t0 + static_cast<double>(i0) * dt_sample;
  const auto ft = half_sided_transform(window, t_first - t_ref, dt_sample, pad_factor, apodization);

  Spectrum1D out;
  out.omega_l = omega_l;
  out.decayed = std::abs(window.back()) <= 1e-6 * peak || peak == 0.0;
  for (std::size_t i = 0; i < ft.omega.size(); ++i) {
    const double nu = angular_to_wavenumber(ft.omega[i]);
    if (std::abs(nu) > half_band) continue;
    out.omega.push_back(omega_l + nu);
    out.values.push_back(ft.values[i]);
  }
  return out;
}

Spectrum1D detection_spectrum(const Trajectory& traj, Slot slot, double t_ref, double tau_w, double window_ps,
                              int pad_factor, Apodization apodization, double half_band) {
  return detection_spectrum(traj.series(slot), traj.t0, traj.dt_sample, traj.omega_l, t_ref, tau_w, window_ps,
                            pad_factor, apodization, half_band);
}

DifferentialTransmission differential_transmission(const Spectrum1D& alpha1_probe, const Spectrum1D& alpha3,
                                                   double tau_w, double kappa, double eta1, double eta2,
                                                   double mask_eps) {
  require_same_grid(alpha1_probe, alpha3);
  const double k2 = 0.5 * wavenumber_to_angular(kappa);
  const double prefactor = k2 * k2 * eta1 * eta2;
  DifferentialTransmission out;
  const std::size_t n = alpha1_probe.omega.size();
  out.omega = alpha1_probe.omega;
  out.dT.assign(n, 0.0);
  out.signal.assign(n, cplx{});
  out.masked.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = pulse_spectrum(alpha1_probe.offset(i), tau_w);
    if (f < mask_eps) {
      out.masked[i] = true;
      continue;
    }
    const cplx s = 2.0 * prefactor * std::conj(alpha1_probe.values[i]) * alpha3.values[i] / (f * f);
    out.signal[i] = s;
    out.dT[i] = s.real();
  }
  return out;
}

std::vector<double> linear_transmission(const Spectrum1D& alpha1_probe, double tau_w, double kappa, double mask_eps) {
  const double k2 = 0.5 * wavenumber_to_angular(kappa);
  std::vector<double> out(alpha1_probe.omega.size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double f = pulse_spectrum(alpha1_probe.offset(i), tau_w);
    if (f < mask_eps) continue;
    out[i] = k2 * k2 * std::norm(alpha1_probe.values[i]) / (f * f);
  }
  return out;
}

std::vector<cplx> linear_response(const std::vector<double>& omega, const SystemParams& params, double omega_l,
                                  double tau_w) {
  return stationary_contributions(omega, 0.0, params, omega_l, tau_w).alpha1;
}

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::linear: return "linear";
    case SpectrumKind::pump_probe_1d: return "pump_probe_1d";
    case SpectrumKind::oneq_nr: return "oneq_nr";
    case SpectrumKind::oneq_r: return "oneq_r";
    case SpectrumKind::oneq_sum: return "oneq_sum";
    case SpectrumKind::twoqc: return "twoqc";
  }
  return "?";
}

double SpectrumGrid::max_abs_real() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v.real()));
  return m;
}

SpectrumGrid SpectrumGrid::normalized() const {
  SpectrumGrid out = *this;
  const double m = max_abs_real();
  if (m > 0.0) {
    for (auto& v : out.values) v /= m;
  }
  out.metadata["normalization"] = "max_abs_real";
  out.metadata["normalization_factor"] = fmt(m);
  return out;
}

std::pair<std::size_t, std::size_t> SpectrumGrid::argmax_abs_real() const {
  std::size_t best = 0;
  double m = -1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i].real()) > m) {
      m = std::abs(values[i].real());
      best = i;
    }
  }
  return {best / cols(), best % cols()};
}

SpectrumGrid ft_delay(const std::vector<std::vector<cplx>>& rows, const std::vector<double>& delays,
                      const std::vector<double>& omega3, double axis_center, double half_band, int pad_factor,
                      Apodization apodization, SpectrumKind kind) {
  if (rows.size() != delays.size()) throw std::invalid_argument("ft_delay: one row per delay required");
  if (delays.size() < 2) throw std::invalid_argument("ft_delay: at least two delays required");
  const double step = delays[1] - delays[0];
  if (!(step > 0.0)) throw std::invalid_argument("ft_delay: delays must increase");
  for (std::size_t k = 0; k < delays.size(); ++k) {
    if (std::abs(delays[k] - (delays[0] + static_cast<double>(k) * step)) > 1e-9 * std::max(1.0, delays.back())) {
      throw std::invalid_argument("ft_delay: delays must be uniformly spaced");
    }
    if (rows[k].size() != omega3.size()) throw std::invalid_argument("ft_delay: row length differs from the w3 axis");
  }

  SpectrumGrid grid;
  grid.kind = kind;
  grid.label = std::string(to_string(kind));
  grid.axis_b = omega3;

  const std::size_t nb = omega3.size();
  std::vector<std::size_t> keep;
  std::vector<std::vector<cplx>> columns(nb);
  std::vector<cplx> series(delays.size());
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t k = 0; k < delays.size(); ++k) series[k] = rows[k][b];
    auto ft = half_sided_transform(series, delays[0], step, pad_factor, apodization);
    if (b == 0) {
      for (std::size_t i = 0; i < ft.omega.size(); ++i) {
        const double nu = angular_to_wavenumber(ft.omega[i]);
        if (std::abs(nu) <= half_band) {
          keep.push_back(i);
          grid.axis_a.push_back(axis_center + nu);
        }
      }
    }
    columns[b].reserve(keep.size());
    for (auto i : keep) columns[b].push_back(ft.values[i]);
  }

  grid.values.resize(grid.axis_a.size() * nb);
  for (std::size_t a = 0; a < grid.axis_a.size(); ++a) {
    for (std::size_t b = 0; b < nb; ++b) grid.values[a * nb + b] = columns[b][a];
  }

  double largest = 0.0, last = 0.0;
  for (const auto& row : rows) {
    for (const auto& v : row) largest = std::max(largest, std::abs(v));
  }
  for (const auto& v : rows.back()) last = std::max(last, std::abs(v));
  const double ratio = largest > 0.0 ? last / largest : 0.0;
  grid.metadata["delay_decay_ratio"] = fmt(ratio);
  grid.metadata["delay_decayed"] = ratio <= 1e-2 ? "true" : "false";
  grid.metadata["delay_step_ps"] = fmt(step);
  grid.metadata["delay_count"] = std::to_string(delays.size());
  grid.metadata["apodization"] = std::string(to_string(apodization));
  return grid;
}

SpectrumGrid ft_excitation(const std::vector<std::vector<cplx>>& rows, const std::vector<double>& tau,
                           const std::vector<double>& omega3, double omega_l, double half_band, int pad_factor,
                           Apodization apodization, SpectrumKind kind) {
  return ft_delay(rows, tau, omega3, omega_l, half_band, pad_factor, apodization, kind);
}

SpectrumGrid ft_waiting(const std::vector<std::vector<cplx>>& rows, const std::vector<double>& T,
                        const std::vector<double>& omega3, double omega_l, double half_band, int pad_factor,
                        Apodization apodization) {
  return ft_delay(rows, T, omega3, 2.0 * omega_l, 2.0 * half_band, pad_factor, apodization, SpectrumKind::twoqc);
}

PolaritonFrequencies polariton_frequencies(const SystemParams& params) {
  const double omega_l = params.omega_c;
  const auto r = derive_rates(params, omega_l);
  const cplx a{-0.5 * r.kappa, r.delta_c};
  const cplx d{-0.5 * params.gamma_ge, r.delta_ge};
  const double g = r.g_ge;
  const cplx mean = 0.5 * (a + d);
  const cplx root = std::sqrt(0.25 * (a - d) * (a - d) - g * g);
  const double scale = std::max({std::abs(a), std::abs(d), g, 1.0});
  if (std::abs(root) <= 1e-12 * scale) {
    throw std::domain_error("polariton_frequencies: degenerate eigenvalues (exceptional point)");
  }
  const cplx l1 = mean + root, l2 = mean - root;
  double w1 = omega_l - l1.imag(), w2 = omega_l - l2.imag();
  double h1 = -l1.real(), h2 = -l2.real();
  if (w1 > w2) {
    std::swap(w1, w2);
    std::swap(h1, h2);
  }
  return {w1, w2, h1, h2};
}

StationaryContributions stationary_contributions(const std::vector<double>& omega, double rho_ee,
                                                 const SystemParams& params, double omega_l, double tau_w,
                                                 const PathwayMask& mask) {
  const auto r = to_angular(derive_rates(params, omega_l, mask));
  const double G = r.g_ge, Gef = r.g_ef;
  StationaryContributions out;
  out.omega = omega;
  const std::size_t n = omega.size();
  out.alpha1.resize(n);
  out.gsb_se.resize(n);
  out.esa.resize(n);
  out.dqc.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = wavenumber_to_angular(omega[i] - omega_l);
    const double f = pulse_spectrum(w, tau_w);
    const cplx Rge = r.r_eg - I * w;
    const cplx Ref = r.r_fe - I * w;
    const cplx D = r.r_c - I * w + G * G / Rge;
    const cplx inv_d = 1.0 / D;  // equals -alpha1 / f
    const cplx a1 = -f * inv_d;
    out.alpha1[i] = a1;
    out.gsb_se[i] = inv_d * 2.0 * G * G * rho_ee * a1 / Rge;
    out.esa[i] = inv_d * (-Gef * Gef * rho_ee * a1 / Ref);
    out.dqc[i] = inv_d * (-G * Gef) * (1.0 / Rge - 1.0 / Ref);
  }
  return out;
}

double argmax_location(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.empty() || x.size() != y.size()) throw std::invalid_argument("argmax_location: size mismatch");
  return x[static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin())];
}

}  // namespace polariton2d
