#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polariton2d/config.hpp"
#include "polariton2d/meanfield_oracle.hpp"
#include "polariton2d/perturbative_engine.hpp"
#include "polariton2d/spectra.hpp"

namespace polariton2d {

/// Raised when a run produces non-finite values or fails a numerical check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Engine trajectory for pulses at t1 = 0, t2 = tau, t3 = tau + T with unit
/// effective drive, long enough for the detection window.
Trajectory simulate_trajectory(const Config& config, double tau, double T);

/// Everything measured at one delay point, per unit drive, on the cropped
/// detection grid.
struct PointResult {
  double tau = 0.0;
  double T = 0.0;
  Spectrum1D alpha1;                     // probe field alpha^(0,0,1)
  std::array<Spectrum1D, 3> alpha3;      // 2QC, NR, R
  std::array<DifferentialTransmission, 3> dT;
  cplx rho_ee_probe_start{};             // ee_12 at t3 per molecule
  std::size_t steps = 0;
};

PointResult simulate_point(const Config& config, double tau, double T);

/// Delay in units of inverse cavity linewidth under the chosen convention.
double delay_in_inverse_kappa(double delay_ps, const SystemParams& params, DelayConvention convention);

struct ScanOutput {
  std::vector<SpectrumGrid> grids;
  std::optional<OracleReport> oracle;
  std::vector<std::string> warnings;
  std::size_t integrator_steps = 0;
};

/// Runs the scan selected by config.scan.kind without touching the disk.
/// Results do not depend on `threads`.
ScanOutput compute_scan(const Config& config, unsigned threads);

/// Largest |a - b| over all grids relative to max(largest |a| of the same grid,
/// floor). The floor keeps grids that vanish identically (harmonic limit, pure
/// round-off) from reporting O(1) drift. Throws std::invalid_argument if the
/// grids are not comparable.
double max_relative_change(const std::vector<SpectrumGrid>& a, const std::vector<SpectrumGrid>& b,
                           double floor = 1e-9);

struct RunOptions {
  unsigned threads = 0;
  bool heatmap = false;
  bool convergence_check = false;
  double convergence_tolerance = 1e-5;
};

struct OutputFile {
  std::string path;  // relative to the run directory
  std::string kind;
  std::uint64_t bytes = 0;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct RunManifest {
  std::string out_dir;
  std::string config_text;
  std::string input_hash;
  std::vector<OutputFile> files;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;
  std::size_t integrator_steps = 0;
  ScanOutput output;

  bool pass() const;
};

/// Git-style blob hash (SHA-1 of "blob <len>\0" + canonical config text).
std::string input_hash(const Config& config);

/// Computes the scan, writes grids (raw and normalized), optional heatmaps,
/// the oracle report and manifest.json into config.scan.out_dir.
RunManifest run_scan(const Config& config, const RunOptions& options);

struct SweepRow {
  std::string value;
  std::string out_dir;
  std::string label;
  double max_abs_real = 0.0;
  double peak_a = 0.0;
  double peak_b = 0.0;
  double min_real = 0.0;
  /// min Re divided by the maximum of the probe-only transmission (pump-probe
  /// runs only, else NaN).
  double normalized_bleach = 0.0;
};

/// One scan per value of `key` (any config key or system.delta_mech) in
/// sub-directories of config.scan.out_dir, plus sweep_summary.txt/.json.
/// Throws ConfigError for unknown keys.
std::vector<SweepRow> sweep(const Config& config, const std::string& key, const std::vector<std::string>& values,
                            const RunOptions& options, std::vector<RunManifest>* manifests = nullptr);

}  // namespace polariton2d
