// Command-line front end: one subcommand per scan kind plus a parameter sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polariton2d/config.hpp"
#include "polariton2d/perturbative_engine.hpp"
#include "polariton2d/runner.hpp"

using namespace polariton2d;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

void print_manifest(const RunManifest& m, const Config& config) {
  std::printf("output: %s  (input hash %s)\n", m.out_dir.c_str(), m.input_hash.c_str());
  for (const auto& f : m.files) std::printf("  %-28s %s\n", f.path.c_str(), f.kind.c_str());
  const auto conv = config.scan.delay_convention;
  std::printf("delays: tau = %.6g ps (%.4g/kappa), T = %.6g ps (%.4g/kappa), %s convention\n",
              config.scan.tau_list.front(), delay_in_inverse_kappa(config.scan.tau_list.front(), config.system, conv),
              config.scan.T_list.front(), delay_in_inverse_kappa(config.scan.T_list.front(), config.system, conv),
              std::string(to_string(conv)).c_str());
  if (m.output.oracle) {
    for (const auto& r : m.output.oracle->rows) {
      std::printf("  %-10s order %d  max rel dev %.3e  tol %.0e  %s\n", r.component.c_str(), r.total_order,
                  r.max_relative_deviation, r.tolerance, r.pass ? "pass" : "FAIL");
    }
  }
  for (const auto& c : m.checks) std::printf("check %-28s %s  %s\n", c.name.c_str(), c.pass ? "pass" : "FAIL", c.detail.c_str());
  for (const auto& w : m.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("wall %.2f s, %zu integrator steps\n", m.wall_seconds, m.integrator_steps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-cycled 1D/2D differential transmission of anharmonic molecular polaritons"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  unsigned threads = 0;
  bool heatmap = false;
  bool convergence = false;
  std::string convention;
  std::string dump_path;

  app.add_option("--config", config_path, "Configuration file ([system], [pulses], [scan])");
  app.add_option("--set", overrides, "Override section.key=value (repeatable)")->take_all();
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_flag("--heatmap", heatmap, "Write PPM heatmaps of 2D grids");
  app.add_flag("--convergence-check", convergence, "Re-run with dt/2 and report the drift");
  app.add_option("--delay-convention", convention, "Delay labels in inverse kappa: angular or ordinary")
      ->check(CLI::IsMember({"angular", "ordinary"}));
  app.add_option("--dump-trajectory", dump_path, "Write the raw trajectory of the first delay point");

  const std::map<std::string, ScanKind> kinds{{"linear", ScanKind::linear},
                                              {"pump-probe", ScanKind::pump_probe},
                                              {"scan-1q", ScanKind::scan_1q},
                                              {"scan-2qc", ScanKind::scan_2qc},
                                              {"stationary", ScanKind::stationary},
                                              {"oracle-validate", ScanKind::oracle_validate}};
  const std::map<std::string, std::string> help{
      {"linear", "Probe-only transmission"},
      {"pump-probe", "1D differential transmission (NR + R) at one (tau, T)"},
      {"scan-1q", "1Q 2D spectra: NR, R and sum over the tau grid"},
      {"scan-2qc", "2QC 2D spectrum over the T grid"},
      {"stationary", "Analytic GSB+SE / ESA / 2QC pathway spectra"},
      {"oracle-validate", "Compare the engine against the phase-cycled mean-field model"}};
  for (const auto& [name, kind] : kinds) app.add_subcommand(name, help.at(name));

  auto* sweep_cmd = app.add_subcommand("sweep", "Repeat a scan over values of one parameter");
  std::string sweep_key;
  std::string sweep_values;
  std::string sweep_kind = "pump-probe";
  sweep_cmd->add_option("--param", sweep_key, "Parameter key, e.g. system.conc_scale")->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->required();
  sweep_cmd->add_option("--kind", sweep_kind, "Scan run for every value")
      ->check(CLI::IsMember({"linear", "pump-probe", "scan-1q", "scan-2qc", "stationary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  Config config;
  try {
    if (!config_path.empty()) config = load_config_file(config_path);
    for (const auto& o : overrides) apply_override(config, o);
    if (!out_dir.empty()) config.scan.out_dir = out_dir;
    if (!convention.empty()) set_value(config, "scan.delay_convention", convention);
    config.validate();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  }

  RunOptions options;
  options.threads = threads;
  options.heatmap = heatmap;
  options.convergence_check = convergence;

  try {
    if (!dump_path.empty()) {
      std::ofstream out(dump_path);
      if (!out) throw ConfigError("--dump-trajectory", "cannot write '" + dump_path + "'");
      write_trajectory(out, simulate_trajectory(config, config.scan.tau_list.front(), config.scan.T_list.front()));
    }

    if (sweep_cmd->parsed()) {
      config.scan.kind = kinds.at(sweep_kind);
      std::vector<std::string> values;
      std::string item;
      std::istringstream ss(sweep_values);
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(item);
      }
      std::vector<RunManifest> manifests;
      const auto rows = sweep(config, sweep_key, values, options, &manifests);
      std::printf("%-14s %-18s %14s %12s %12s %14s %14s\n", "value", "grid", "max_abs_real", "peak_a", "peak_b",
                  "min_real", "norm_bleach");
      for (const auto& r : rows) {
        std::printf("%-14s %-18s %14.6e %12.4f %12.4f %14.6e %14.6e\n", r.value.c_str(), r.label.c_str(),
                    r.max_abs_real, r.peak_a, r.peak_b, r.min_real, r.normalized_bleach);
      }
      bool ok = true;
      for (const auto& m : manifests) ok = ok && m.pass();
      return ok ? kExitOk : kExitNumerical;
    }

    for (const auto& [name, kind] : kinds) {
      if (app.got_subcommand(name)) config.scan.kind = kind;
    }
    const auto manifest = run_scan(config, options);
    print_manifest(manifest, config);
    return manifest.pass() ? kExitOk : kExitNumerical;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
}
