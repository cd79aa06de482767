#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "polariton2d/config.hpp"
#include "polariton2d/perturbative_engine.hpp"

namespace polariton2d {

/// alpha followed by the 3x3 density matrix, row-major in the basis g, e, f.
using MeanFieldVector = std::array<cplx, 10>;

struct MeanFieldState {
  cplx alpha{};
  std::array<cplx, 9> rho{};
  double time = 0.0;

  cplx at(int row, int col) const { return rho[3 * row + col]; }
};

struct MeanFieldDiagnostics {
  double max_hermiticity_error = 0.0;
  double max_trace_error = 0.0;
  double min_population = 1.0;
  double max_population = 0.0;
};

struct MeanFieldTrajectory {
  double t0 = 0.0;
  double dt_sample = 0.0;
  std::vector<MeanFieldVector> samples;
  MeanFieldDiagnostics diagnostics;

  MeanFieldState state(std::size_t i) const;
  /// Species element of every sample (rho_eg = <e|rho|g>, rho_fe = <f|rho|e>, ...).
  std::vector<cplx> series(Species species) const;
};

/// Non-perturbative mean-field model: one cavity mode and the three-level
/// density matrix, with the pulse phases entering the drive as e^{-i phi_j}.
/// Same rotating frame, units and start time as propagate_sequence. rho is the
/// single-molecule matrix; N = relative_molecule_count() identical molecules
/// feed the field, so the engine's collective elements are sqrt(N) rho_eg,
/// sqrt(N) rho_fe, N rho_ee and N rho_fg. Only
/// mask.disable_ef_coupling is honoured; EID acts on the e-g coherence
/// through Re rho_ee.
MeanFieldTrajectory propagate_meanfield(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask,
                                        double t_end, double dt, int record_stride);

struct PhaseRuns {
  int n_phi = 0;
  /// Effective drive amplitudes used in every run.
  std::array<double, 3> eta{};
  /// relative_molecule_count() of the system the runs were made for.
  double molecule_count = 1.0;
  /// Run (k1, k2, k3) sits at index (k1 * n_phi + k2) * n_phi + k3.
  std::vector<MeanFieldTrajectory> runs;
};

/// Propagates all n_phi^3 phase combinations phi_j = 2 pi k_j / n_phi at
/// effective drive amplitude `eta` per pulse.
PhaseRuns run_phase_grid(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask, int n_phi,
                         double eta, double t_end, double dt, int record_stride, unsigned threads);

/// True when n_phi < 2 max|v_i| + 1.
bool aliasing_risk(int n_phi, const std::array<int, 3>& phase);

/// Discrete inverse phase transform mean_k e^{+i v.phi_k} X(phi_k) divided by
/// prod eta_j^{order_j}, rescaled to the engine's collective elements. Throws std::invalid_argument for an incomplete grid.
std::vector<cplx> extract_component(const PhaseRuns& runs, const std::array<int, 3>& phase,
                                    const std::array<int, 3>& order, Species species = Species::alpha);

struct OracleRow {
  std::string component;
  int total_order = 0;
  double max_relative_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  MeanFieldDiagnostics diagnostics;  // worst case over all runs
  bool pass() const;
};

/// Tolerance for the relative L-infinity deviation of an extracted component.
double oracle_tolerance(int total_order);

/// Compares every propagated slot of the engine (unit effective drive, full
/// model, EID also in the double-quantum combination) with the phase-cycled
/// extraction at scan.oracle_eta and scan.n_phi.
OracleReport validate_against_engine(const Config& config, unsigned threads);

}  // namespace polariton2d
