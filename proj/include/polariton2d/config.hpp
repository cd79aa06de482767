#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polariton2d/pathway_mask.hpp"
#include "polariton2d/units.hpp"

namespace polariton2d {

/// Raised for malformed or invalid configuration. `key()` is the
/// "section.key" path of the offending entry (empty for document-level errors).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Physical constants of the cavity and the three-level molecule. Frequencies,
/// linewidths and couplings are in cm^-1. Defaults reproduce the W(CO)6
/// parameter set.
struct SystemParams {
  double omega_c = 1983.0;
  double kappa = 11.0;
  double omega_e = 1983.0;
  double omega_fe = 1968.0;
  double g_collective = 18.5;
  double delta_el = -0.25;
  double gamma_ge = 6.0;
  double gamma_ef = 9.0;
  double beta_eid = 0.0;
  double conc_scale = 1.0;
  double kappa_scale = 1.0;

  /// Mechanical anharmonicity (omega_f - omega_e) - (omega_e - omega_g).
  double delta_mech() const { return omega_fe - omega_e; }
  /// Collective coupling after the concentration multiplier.
  double effective_g() const { return g_collective * conc_scale; }
  /// Cavity linewidth after the cavity-length multiplier (kappa ~ 1/L).
  double effective_kappa() const { return kappa / kappa_scale; }
  /// Drive amplitudes scale as sqrt(kappa).
  double drive_scale() const;
  /// Molecule number relative to the reference sample, N/N0 = n/n0 * L/L0.
  /// Every third-order source carries 1/N relative to the linear response.
  double relative_molecule_count() const { return conc_scale * kappa_scale; }

  /// Throws ConfigError naming the violated key.
  void validate() const;

  bool operator==(const SystemParams&) const = default;
};

/// Three Gaussian pulses sharing one width and one carrier frequency.
/// Times in ps, carrier in cm^-1, phases in rad.
struct PulseTrain {
  std::array<double, 3> eta{1.0, 1.0, 1.0};
  double tau_w = 0.1;
  std::array<double, 3> t{0.0, 0.0, 0.0};
  double omega_l = 1983.0;
  std::array<double, 3> phi{0.0, 0.0, 0.0};

  double tau() const { return t[1] - t[0]; }
  double waiting() const { return t[2] - t[1]; }

  /// Places the pulses at t1 = 0, t2 = tau, t3 = tau + T.
  PulseTrain with_delays(double tau, double T) const;
  /// Drive amplitudes after the cavity-length rescaling of `params`.
  std::array<double, 3> effective_eta(const SystemParams& params) const;

  void validate() const;

  bool operator==(const PulseTrain&) const = default;
};

enum class ScanKind { linear, pump_probe, scan_1q, scan_2qc, oracle_validate, stationary };
enum class Apodization { none, half_hann };

std::string_view to_string(ScanKind kind);
std::string_view to_string(Apodization apodization);
std::string_view to_string(DelayConvention convention);

struct ScanSpec {
  ScanKind kind = ScanKind::pump_probe;
  /// Excitation delays tau (ps). scan_1q loops over all of them; other
  /// kinds use the first entry.
  std::vector<double> tau_list{0.0};
  /// Waiting delays T (ps). scan_2qc loops over all of them; other kinds use
  /// the first entry.
  std::vector<double> T_list{0.0};
  double window_ps = 30.0;
  double dt = 0.0005;
  int record_stride = 10;
  Apodization apodization = Apodization::none;
  int pad_factor = 2;
  double mask_eps = 1e-3;
  /// Half-width (cm^-1) of the reported band around the carrier (twice
  /// this around 2 omega_l on the double-quantum axis).
  double omega_window = 150.0;
  std::string out_dir = "out";
  PathwayMask mask{};
  int n_phi = 5;
  double oracle_eta = 1e-3;
  double stationary_rho_ee = 0.01;
  DelayConvention delay_convention = DelayConvention::angular;
  bool binary_output = false;

  void validate() const;

  bool operator==(const ScanSpec&) const = default;
};

struct Config {
  SystemParams system{};
  PulseTrain pulses{};
  ScanSpec scan{};

  void validate() const {
    system.validate();
    pulses.validate();
    scan.validate();
  }
  bool operator==(const Config&) const = default;
};

/// Parses an INI-style document with [system], [pulses] and [scan] sections.
/// Keys absent from the document keep their defaults. The result is validated.
Config load_config(std::string_view text);

/// Reads `path` and forwards to load_config.
Config load_config_file(const std::string& path);

/// Applies one "section.key=value" assignment. Besides the stored keys,
/// `system.delta_mech` sets omega_fe = omega_e + value. Does not validate.
void apply_override(Config& config, std::string_view assignment);

/// Sets one "section.key" to `value`. Does not validate.
void set_value(Config& config, std::string_view key, std::string_view value);

/// Returns the canonical text of every stored key; load_config inverts it exactly.
std::string serialize(const Config& config);

/// All stored "section.key" names in canonical order.
std::vector<std::string> config_keys();

/// Parses "start:step:stop" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);

}  // namespace polariton2d
