#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polariton2d/config.hpp"
#include "polariton2d/molecular_model.hpp"
#include "polariton2d/pathway_mask.hpp"

namespace polariton2d {

enum class Species { alpha, rho_eg, rho_ee, rho_fg, rho_fe };

std::string_view to_string(Species species);

/// Order (n,m,l), phase signature v and species of one expansion component.
/// `conjugate` marks the complex-conjugate quantity (alpha* or rho_ge ...),
/// which is reconstructed from the propagated slot and never stored.
struct ComponentKey {
  std::array<int, 3> order{};
  std::array<int, 3> phase{};
  Species species = Species::alpha;
  bool conjugate = false;

  /// Throws std::logic_error unless every phase index has the parity of its
  /// order index and |v_i| <= order_i.
  static ComponentKey make(std::array<int, 3> order, std::array<int, 3> phase, Species species);

  /// [X_v]* as the conjugate quantity at -v.
  ComponentKey conjugated() const;
  std::string name() const;

  bool operator==(const ComponentKey&) const = default;
};

/// Storage slots of the 24 propagated components. ee_jk carries phase
/// Phi_j - Phi_k; the third-order slots are ordered 2QC (Phi1+Phi2-Phi3),
/// NR (Phi1-Phi2+Phi3), R (-Phi1+Phi2+Phi3).
enum Slot : int {
  a1, a2, a3,
  e1, e2, e3,
  ee12, ee21, ee13, ee31, ee23, ee32,
  fg12, fg13, fg23,
  eg_dqc, eg_nr, eg_r,
  fe_dqc, fe_nr, fe_r,
  a_dqc, a_nr, a_r,
  kSlotCount
};

enum class Combination { dqc, nr, r };

inline constexpr std::array<Combination, 3> kCombinations{Combination::dqc, Combination::nr, Combination::r};

std::string_view to_string(Combination c);
/// Phase signature of a third-order combination.
std::array<int, 3> phase_of(Combination c);
Slot alpha_slot(Combination c);

using State = std::array<cplx, kSlotCount>;

ComponentKey slot_key(Slot slot);
std::string_view slot_name(Slot slot);
/// Slot holding `key`, if it is one of the propagated components.
std::optional<Slot> find_slot(const ComponentKey& key);
/// Value of `key` in `state`, reconstructing conjugates. Throws
/// std::out_of_range for keys that are neither propagated nor conjugates of
/// propagated ones.
cplx component_value(const State& state, const ComponentKey& key);

/// Everything the right-hand side needs, in rad/ps and ps.
struct EngineModel {
  cplx kc{};   // kappa/2 - i delta_c
  cplx rge{};  // gamma_ge/2 - i delta_ge
  cplx ref{};  // gamma_ef/2 - i delta_ef
  cplx rfg{};  // gamma_ge + gamma_ef - i (delta_ge + delta_ef)
  double g = 0.0;
  double gef = 0.0;
  double beta = 0.0;
  /// 1 / relative_molecule_count(), multiplies every third-order source.
  double nonlinear_scale = 1.0;
  std::array<double, 3> eta{};
  std::array<double, 3> t{};
  double tau_w = 0.1;
  PathwayMask mask{};

  static EngineModel build(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask);

  /// Fastest rate of the rotating-frame problem (rad/ps), used for the step bound.
  double fastest_rate() const;
};

/// Drive envelope of pulse j at time t, zero beyond 12 widths.
double drive_envelope(const EngineModel& model, int j, double t);

void derivative(const State& state, double t, const EngineModel& model, State& out);
State derivative(const State& state, double t, const EngineModel& model);

State step_fixed(const State& state, double t, double dt, const EngineModel& model);

/// Rejects dt with dt * fastest_rate > 0.1 (ConfigError on scan.dt).
void validate_step(double dt, const EngineModel& model);

struct Trajectory {
  double t0 = 0.0;
  double dt_sample = 0.0;
  double omega_l = 0.0;
  std::vector<State> samples;

  std::size_t size() const { return samples.size(); }
  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt_sample; }
  std::vector<cplx> series(Slot slot) const;
  std::vector<cplx> series(const ComponentKey& key) const;
};

/// Earliest integration time: first arrival minus 8 widths.
double start_time(const PulseTrain& pulses);

/// Integrates from start_time(pulses) to t_end with step dt, recording every
/// record_stride steps (the first sample is the initial state).
Trajectory propagate_sequence(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask,
                              double t_end, double dt, int record_stride);

/// Columnar text: t_ps then Re/Im per slot in slot order.
void write_trajectory(std::ostream& out, const Trajectory& traj);

}  // namespace polariton2d
