#include "polariton2d/runner.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "polariton2d/heatmap.hpp"
#include "polariton2d/parallel.hpp"
#include "polariton2d/spectrum_io.hpp"
#include "polariton2d/units.hpp"

namespace polariton2d {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PulseTrain unit_drive(const Config& config, double tau, double T) {
  PulseTrain p = config.pulses.with_delays(tau, T);
  const double s = config.system.drive_scale();
  for (auto& e : p.eta) e = 1.0 / s;
  return p;
}

void check_delays(const ScanSpec& scan) {
  if (scan.tau_list.front() < 0.0) throw ConfigError("scan.tau_list", "delays must be >= 0");
  if (scan.T_list.front() < 0.0) throw ConfigError("scan.T_list", "delays must be >= 0");
}

void check_finite(const SpectrumGrid& grid) {
  for (const auto& v : grid.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("non-finite value in grid '" + grid.label + "'");
    }
  }
}

void annotate(SpectrumGrid& grid, const Config& config) {
  std::istringstream lines(serialize(config));
  std::string line, section;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (line.front() == '[') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find(" = ");
    grid.metadata["config." + section + "." + line.substr(0, eq)] = line.substr(eq + 3);
  }
  grid.metadata["signal_convention"] = "pump-on minus pump-off, dT = +2 Re[conj(a1) a3]";
  grid.metadata["absorptive_part"] = "real";
  if (grid.metadata.find("normalization") == grid.metadata.end()) grid.metadata["normalization"] = "none";
  const auto pf = polariton_frequencies(config.system);
  grid.metadata["omega_lp"] = fmt(pf.omega_lp);
  grid.metadata["omega_up"] = fmt(pf.omega_up);
}

SpectrumGrid grid_1d(SpectrumKind kind, std::string label, const std::vector<double>& omega,
                     std::vector<cplx> values) {
  SpectrumGrid g;
  g.kind = kind;
  g.label = std::move(label);
  g.axis_a = omega;
  g.values = std::move(values);
  return g;
}

std::size_t count_masked(const DifferentialTransmission& dt) {
  return static_cast<std::size_t>(std::count(dt.masked.begin(), dt.masked.end(), true));
}

// Rows of per-delay signals for one combination; rephasing rows conjugated.
struct DelayRows {
  std::vector<std::vector<cplx>> rows;
  std::vector<double> omega3;
  std::size_t steps = 0;
  bool window_decayed = true;
};

std::array<DelayRows, 3> scan_delays(const Config& config, const std::vector<double>& delays, bool over_tau,
                                     unsigned threads) {
  const std::size_t n = delays.size();
  std::vector<PointResult> points(n);
  parallel_for(n, threads, [&](std::size_t k) {
    const double tau = over_tau ? delays[k] : config.scan.tau_list.front();
    const double T = over_tau ? config.scan.T_list.front() : delays[k];
    try {
      points[k] = simulate_point(config, tau, T);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw NumericalError("grid point (tau=" + fmt(tau) + ", T=" + fmt(T) + ") failed: " + e.what());
    }
  });
  std::array<DelayRows, 3> out;
  for (std::size_t c = 0; c < 3; ++c) {
    out[c].omega3 = points.front().alpha1.omega;
    for (const auto& p : points) {
      auto row = p.dT[c].signal;
      if (kCombinations[c] == Combination::r) {
        for (auto& v : row) v = std::conj(v);
      }
      out[c].rows.push_back(std::move(row));
      out[c].steps += p.steps;
      out[c].window_decayed = out[c].window_decayed && p.alpha3[c].decayed && p.alpha1.decayed;
    }
  }
  return out;
}

std::vector<double> detection_axis(const Config& config) {
  const auto& s = config.scan;
  const double dts = s.dt * s.record_stride;
  const auto n = static_cast<double>(std::llround((8.0 * config.pulses.tau_w + s.window_ps) / dts));
  const double dnu = angular_to_wavenumber(kTwoPi / (n * s.pad_factor * dts));
  std::vector<double> omega;
  const auto m = static_cast<long>(std::floor(s.omega_window / dnu));
  for (long i = -m; i <= m; ++i) omega.push_back(config.pulses.omega_l + static_cast<double>(i) * dnu);
  return omega;
}

std::string sha1_blob(const std::string& content) {
  const std::string blob = "blob " + std::to_string(content.size()) + std::string(1, '\0') + content;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(blob.data(), blob.size(), digest, &len, EVP_sha1(), nullptr) != 1) {
    throw std::runtime_error("SHA-1 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::uint64_t bytes_on_disk(const fs::path& p) { return static_cast<std::uint64_t>(fs::file_size(p)); }

std::string write_oracle_report(const OracleReport& report) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %5s %14s %10s %s\n", "component", "order", "max_rel_dev", "tolerance",
                "result");
  out << buf;
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%-12s %5d %14.6e %10.1e %s\n", r.component.c_str(), r.total_order,
                  r.max_relative_deviation, r.tolerance, r.pass ? "pass" : "FAIL");
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "# hermiticity %.3e  trace %.3e  populations [%.3e, %.3e]\n",
                report.diagnostics.max_hermiticity_error, report.diagnostics.max_trace_error,
                report.diagnostics.min_population, report.diagnostics.max_population);
  out << buf;
  return out.str();
}

}  // namespace

Trajectory simulate_trajectory(const Config& config, double tau, double T) {
  const auto pulses = unit_drive(config, tau, T);
  const auto& s = config.scan;
  const double t_end = pulses.t[2] + s.window_ps + 2.0 * s.dt * s.record_stride;
  return propagate_sequence(config.system, pulses, s.mask, t_end, s.dt, s.record_stride);
}

PointResult simulate_point(const Config& config, double tau, double T) {
  const auto& s = config.scan;
  const auto traj = simulate_trajectory(config, tau, T);
  const double t3 = tau + T;
  const double tw = config.pulses.tau_w;
  PointResult p;
  p.tau = tau;
  p.T = T;
  p.steps = (traj.size() - 1) * static_cast<std::size_t>(s.record_stride);
  p.alpha1 = detection_spectrum(traj, a3, t3, tw, s.window_ps, s.pad_factor, s.apodization, s.omega_window);
  const auto eta = config.pulses.effective_eta(config.system);
  for (std::size_t c = 0; c < 3; ++c) {
    p.alpha3[c] = detection_spectrum(traj, alpha_slot(kCombinations[c]), t3, tw, s.window_ps, s.pad_factor,
                                     s.apodization, s.omega_window);
    p.dT[c] = differential_transmission(p.alpha1, p.alpha3[c], tw, config.system.effective_kappa(), eta[0], eta[1],
                                        s.mask_eps);
  }
  const auto i3 = static_cast<std::size_t>(std::llround((t3 - traj.t0) / traj.dt_sample));
  p.rho_ee_probe_start = traj.samples.at(std::min(i3, traj.size() - 1))[ee12] / config.system.relative_molecule_count();
  return p;
}

double delay_in_inverse_kappa(double delay_ps, const SystemParams& params, DelayConvention convention) {
  return delay_ps / inverse_rate_ps(params.effective_kappa(), convention);
}

ScanOutput compute_scan(const Config& config, unsigned threads) {
  config.validate();
  check_delays(config.scan);
  const auto& s = config.scan;
  const double tau0 = s.tau_list.front();
  const double T0 = s.T_list.front();
  const double kappa = config.system.effective_kappa();
  ScanOutput out;

  auto add_point_warnings = [&out](const PointResult& p) {
    if (!p.alpha1.decayed) out.warnings.push_back("probe field has not decayed by the end of the detection window");
    for (std::size_t c = 0; c < 3; ++c) {
      if (!p.alpha3[c].decayed) {
        out.warnings.push_back(std::string("third-order field ") + std::string(to_string(kCombinations[c])) +
                               " has not decayed by the end of the detection window");
      }
    }
  };

  switch (s.kind) {
    case ScanKind::linear:
    case ScanKind::pump_probe: {
      const auto p = simulate_point(config, tau0, T0);
      out.integrator_steps = p.steps;
      add_point_warnings(p);
      const auto T_lin = linear_transmission(p.alpha1, config.pulses.tau_w, kappa, s.mask_eps);
      const double T_max = *std::max_element(T_lin.begin(), T_lin.end());
      if (s.kind == ScanKind::linear) {
        std::vector<cplx> v(T_lin.begin(), T_lin.end());
        auto g = grid_1d(SpectrumKind::linear, "linear", p.alpha1.omega, std::move(v));
        g.metadata["quantity"] = "probe-only transmission";
        g.metadata["linear_T_max"] = fmt(T_max);
        out.grids.push_back(std::move(g));
      } else {
        const auto& nr = p.dT[static_cast<int>(Combination::nr)];
        const auto& r = p.dT[static_cast<int>(Combination::r)];
        std::vector<cplx> v(nr.signal.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = nr.signal[i] + r.signal[i];
        auto g = grid_1d(SpectrumKind::pump_probe_1d, "pump_probe", p.alpha1.omega, std::move(v));
        g.metadata["combination"] = "nr+r";
        g.metadata["tau_ps"] = fmt(tau0);
        g.metadata["T_ps"] = fmt(T0);
        g.metadata["linear_T_max"] = fmt(T_max);
        g.metadata["masked_points"] = std::to_string(count_masked(nr));
        out.grids.push_back(std::move(g));
      }
      break;
    }
    case ScanKind::scan_1q: {
      if (s.tau_list.size() < 2) throw ConfigError("scan.tau_list", "scan_1q needs at least two delays");
      auto rows = scan_delays(config, s.tau_list, true, threads);
      const auto& nr = rows[static_cast<int>(Combination::nr)];
      const auto& r = rows[static_cast<int>(Combination::r)];
      out.integrator_steps = nr.steps;
      if (!nr.window_decayed || !r.window_decayed) {
        out.warnings.push_back("third-order fields have not decayed by the end of the detection window");
      }
      auto g_nr = ft_excitation(nr.rows, s.tau_list, nr.omega3, config.pulses.omega_l, s.omega_window, s.pad_factor,
                                s.apodization, SpectrumKind::oneq_nr);
      auto g_r = ft_excitation(r.rows, s.tau_list, r.omega3, config.pulses.omega_l, s.omega_window, s.pad_factor,
                               s.apodization, SpectrumKind::oneq_r);
      g_r.metadata["frequency_flip"] = "rephasing rows conjugated before the transform";
      SpectrumGrid g_sum = g_nr;
      g_sum.kind = SpectrumKind::oneq_sum;
      g_sum.label = "oneq_sum";
      for (std::size_t i = 0; i < g_sum.values.size(); ++i) g_sum.values[i] += g_r.values[i];
      for (auto* g : {&g_nr, &g_r, &g_sum}) {
        g->metadata["T_ps"] = fmt(T0);
        if (g->metadata["delay_decayed"] == "false") {
          out.warnings.push_back(g->label + ": signal has not decayed at the largest tau");
        }
      }
      out.grids.push_back(std::move(g_nr));
      out.grids.push_back(std::move(g_r));
      out.grids.push_back(std::move(g_sum));
      break;
    }
    case ScanKind::scan_2qc: {
      if (s.T_list.size() < 2) throw ConfigError("scan.T_list", "scan_2qc needs at least two delays");
      auto rows = scan_delays(config, s.T_list, false, threads);
      const auto& dqc = rows[static_cast<int>(Combination::dqc)];
      out.integrator_steps = dqc.steps;
      if (!dqc.window_decayed) out.warnings.push_back("2QC field has not decayed by the end of the detection window");
      auto g = ft_waiting(dqc.rows, s.T_list, dqc.omega3, config.pulses.omega_l, s.omega_window, s.pad_factor,
                          s.apodization);
      g.metadata["tau_ps"] = fmt(tau0);
      if (g.metadata["delay_decayed"] == "false") out.warnings.push_back("twoqc: signal has not decayed at the largest T");
      out.grids.push_back(std::move(g));
      break;
    }
    case ScanKind::stationary: {
      const auto omega = detection_axis(config);
      const auto sc = stationary_contributions(omega, s.stationary_rho_ee, config.system, config.pulses.omega_l,
                                               config.pulses.tau_w, s.mask);
      const double k2 = 0.5 * wavenumber_to_angular(kappa);
      auto to_dT = [&](const std::vector<cplx>& x) {
        std::vector<cplx> v(omega.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
          const double f = pulse_spectrum(wavenumber_to_angular(omega[i] - config.pulses.omega_l), config.pulses.tau_w);
          if (f < s.mask_eps) continue;
          v[i] = 2.0 * k2 * k2 * std::conj(sc.alpha1[i]) * x[i] / (f * f);
        }
        return v;
      };
      std::vector<cplx> sum(omega.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = sc.gsb_se[i] + sc.esa[i];
      out.grids.push_back(grid_1d(SpectrumKind::pump_probe_1d, "stationary_gsb_se", omega, to_dT(sc.gsb_se)));
      out.grids.push_back(grid_1d(SpectrumKind::pump_probe_1d, "stationary_esa", omega, to_dT(sc.esa)));
      out.grids.push_back(grid_1d(SpectrumKind::pump_probe_1d, "stationary_sum", omega, to_dT(sum)));
      out.grids.push_back(grid_1d(SpectrumKind::pump_probe_1d, "stationary_dqc_transfer", omega, sc.dqc));
      for (auto& g : out.grids) g.metadata["rho_ee"] = fmt(s.stationary_rho_ee);
      out.grids.back().metadata["quantity"] = "third-order field per unit conj(alpha1)*rho_fg source";
      break;
    }
    case ScanKind::oracle_validate: {
      Config c = config;
      c.pulses = config.pulses.with_delays(tau0, T0);
      out.oracle = validate_against_engine(c, threads);
      break;
    }
  }

  for (auto& g : out.grids) {
    check_finite(g);
    annotate(g, config);
  }
  return out;
}

double max_relative_change(const std::vector<SpectrumGrid>& a, const std::vector<SpectrumGrid>& b, double floor) {
  if (a.size() != b.size()) throw std::invalid_argument("max_relative_change: different grid counts");
  double worst = 0.0;
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a[g].values.size() != b[g].values.size()) {
      throw std::invalid_argument("max_relative_change: grid '" + a[g].label + "' changed shape");
    }
    double peak = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < a[g].values.size(); ++i) {
      peak = std::max(peak, std::abs(a[g].values[i]));
      diff = std::max(diff, std::abs(a[g].values[i] - b[g].values[i]));
    }
    worst = std::max(worst, diff / std::max(peak, floor));
  }
  return worst;
}

bool RunManifest::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string input_hash(const Config& config) { return sha1_blob(serialize(config)); }

RunManifest run_scan(const Config& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest m;
  m.out_dir = config.scan.out_dir;
  m.config_text = serialize(config);
  m.input_hash = input_hash(config);
  m.output = compute_scan(config, options.threads);
  m.integrator_steps = m.output.integrator_steps;
  m.warnings = m.output.warnings;

  CheckResult finite{"finite_values", true, "all grids finite"};
  m.checks.push_back(finite);

  if (m.output.oracle) {
    const auto& rep = *m.output.oracle;
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.max_relative_deviation / r.tolerance);
    m.checks.push_back({"oracle_equivalence", rep.pass(), "worst deviation / tolerance = " + fmt(worst)});
    const bool hygiene = rep.diagnostics.max_hermiticity_error <= 1e-9 && rep.diagnostics.max_trace_error <= 1e-9;
    m.checks.push_back({"meanfield_hermiticity_trace", hygiene,
                        "hermiticity " + fmt(rep.diagnostics.max_hermiticity_error) + ", trace " +
                            fmt(rep.diagnostics.max_trace_error)});
  }

  if (options.convergence_check && !m.output.grids.empty()) {
    Config half = config;
    half.scan.dt = 0.5 * config.scan.dt;
    half.scan.record_stride = 2 * config.scan.record_stride;
    const auto refined = compute_scan(half, options.threads);
    const double drift = max_relative_change(m.output.grids, refined.grids);
    m.integrator_steps += refined.integrator_steps;
    m.checks.push_back({"dt_halving", drift < options.convergence_tolerance,
                        "max relative change " + fmt(drift) + " (tolerance " + fmt(options.convergence_tolerance) +
                            ")"});
  }

  const fs::path dir(config.scan.out_dir);
  fs::create_directories(dir);
  auto record = [&](const std::string& name, const std::string& kind) {
    m.files.push_back({name, kind, bytes_on_disk(dir / name)});
  };

  PolaritonFrequencies pf{};
  bool have_pf = true;
  try {
    pf = polariton_frequencies(config.system);
  } catch (const std::domain_error&) {
    have_pf = false;
  }

  for (const auto& g : m.output.grids) {
    const auto norm = g.normalized();
    if (g.is_2d()) {
      write_grid_text((dir / (g.label + ".txt")).string(), g);
      record(g.label + ".txt", std::string(to_string(g.kind)));
      write_grid_text((dir / (g.label + "_norm.txt")).string(), norm);
      record(g.label + "_norm.txt", std::string(to_string(g.kind)) + "_normalized");
      if (config.scan.binary_output) {
        write_grid_binary((dir / (g.label + ".bin")).string(), g);
        record(g.label + ".bin", std::string(to_string(g.kind)) + "_binary");
      }
      if (options.heatmap && have_pf) {
        emit_heatmap(g, pf, (dir / (g.label + ".ppm")).string());
        record(g.label + ".ppm", "heatmap");
      }
    } else {
      write_spectrum_csv((dir / (g.label + ".csv")).string(), g);
      record(g.label + ".csv", std::string(to_string(g.kind)));
      write_spectrum_csv((dir / (g.label + "_norm.csv")).string(), norm);
      record(g.label + "_norm.csv", std::string(to_string(g.kind)) + "_normalized");
    }
  }
  if (m.output.oracle) {
    std::ofstream(dir / "oracle_report.txt") << write_oracle_report(*m.output.oracle);
    record("oracle_report.txt", "oracle_report");
  }

  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::ordered_json j;
  j["config"] = m.config_text;
  j["input_hash"] = m.input_hash;
  j["scan_kind"] = std::string(to_string(config.scan.kind));
  const auto conv = config.scan.delay_convention;
  j["delay_labels"] = {
      {"convention", std::string(to_string(conv))},
      {"tau_inverse_kappa", delay_in_inverse_kappa(config.scan.tau_list.front(), config.system, conv)},
      {"T_inverse_kappa", delay_in_inverse_kappa(config.scan.T_list.front(), config.system, conv)}};
  if (have_pf) {
    j["polaritons"] = {{"omega_lp", pf.omega_lp},
                       {"omega_up", pf.omega_up},
                       {"gamma_lp", pf.gamma_lp},
                       {"gamma_up", pf.gamma_up}};
  }
  m.files.push_back({"manifest.json", "manifest", 0});
  j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : m.files) j["files"].push_back({{"path", f.path}, {"kind", f.kind}, {"bytes", f.bytes}});
  j["wall_seconds"] = m.wall_seconds;
  j["integrator_steps"] = m.integrator_steps;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : m.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["warnings"] = m.warnings;
  j["pass"] = m.pass();
  std::ofstream(dir / "manifest.json") << j.dump(2) << '\n';
  return m;
}

std::vector<SweepRow> sweep(const Config& config, const std::string& key, const std::vector<std::string>& values,
                            const RunOptions& options, std::vector<RunManifest>* manifests) {
  const auto keys = config_keys();
  if (key != "system.delta_mech" && std::find(keys.begin(), keys.end(), key) == keys.end()) {
    throw ConfigError(key, "unknown key");
  }
  if (values.empty()) throw ConfigError(key, "sweep needs at least one value");

  std::vector<SweepRow> rows;
  const fs::path base(config.scan.out_dir);
  for (const auto& value : values) {
    Config c = config;
    set_value(c, key, value);
    std::string leaf = key + "=" + value;
    std::replace(leaf.begin(), leaf.end(), '/', '_');
    c.scan.out_dir = (base / leaf).string();
    c.validate();
    auto m = run_scan(c, options);

    SweepRow row;
    row.value = value;
    row.out_dir = leaf;
    row.normalized_bleach = std::numeric_limits<double>::quiet_NaN();
    const SpectrumGrid* primary = nullptr;
    for (const auto& g : m.output.grids) {
      if (g.kind == SpectrumKind::oneq_r || g.kind == SpectrumKind::oneq_nr) continue;
      if (g.label == "stationary_gsb_se" || g.label == "stationary_esa" || g.label == "stationary_dqc_transfer") {
        continue;
      }
      primary = &g;
    }
    if (primary) {
      row.label = primary->label;
      row.max_abs_real = primary->max_abs_real();
      const auto [a, b] = primary->argmax_abs_real();
      row.peak_a = primary->axis_a[a];
      row.peak_b = primary->is_2d() ? primary->axis_b[b] : 0.0;
      row.min_real = std::numeric_limits<double>::infinity();
      for (const auto& v : primary->values) row.min_real = std::min(row.min_real, v.real());
      const auto it = primary->metadata.find("linear_T_max");
      if (primary->kind == SpectrumKind::pump_probe_1d && it != primary->metadata.end()) {
        row.normalized_bleach = row.min_real / std::stod(it->second);
      }
    }
    rows.push_back(row);
    if (manifests) manifests->push_back(std::move(m));
  }

  fs::create_directories(base);
  {
    std::ofstream out(base / "sweep_summary.txt");
    char buf[256];
    std::snprintf(buf, sizeof buf, "# sweep over %s\n%-16s %-18s %14s %12s %12s %14s %14s\n", key.c_str(), "value",
                  "grid", "max_abs_real", "peak_a", "peak_b", "min_real", "norm_bleach");
    out << buf;
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%-16s %-18s %14.6e %12.4f %12.4f %14.6e %14.6e\n", r.value.c_str(),
                    r.label.c_str(), r.max_abs_real, r.peak_a, r.peak_b, r.min_real, r.normalized_bleach);
      out << buf;
    }
  }
  nlohmann::ordered_json j;
  j["key"] = key;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e{{"value", r.value},     {"out_dir", r.out_dir},   {"grid", r.label},
                             {"max_abs_real", r.max_abs_real}, {"peak_a", r.peak_a}, {"peak_b", r.peak_b},
                             {"min_real", r.min_real}};
    if (std::isfinite(r.normalized_bleach)) e["normalized_bleach"] = r.normalized_bleach;
    j["rows"].push_back(e);
  }
  std::ofstream(base / "sweep_summary.json") << j.dump(2) << '\n';
  return rows;
}

}  // namespace polariton2d
