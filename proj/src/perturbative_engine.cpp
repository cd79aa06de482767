#include "polariton2d/perturbative_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "polariton2d/rk4.hpp"
#include "polariton2d/units.hpp"

namespace polariton2d {

namespace {

constexpr cplx I{0.0, 1.0};

// ee slot with phase Phi_j - Phi_k (0-based pulse indices).
Slot ee_slot(int j, int k) {
  static constexpr Slot table[3][3] = {{kSlotCount, ee12, ee13}, {ee21, kSlotCount, ee23}, {ee31, ee32, kSlotCount}};
  return table[j][k];
}

Slot fg_slot(int j, int k) {
  if (j > k) std::swap(j, k);
  if (j == 0) return k == 1 ? fg12 : fg13;
  return fg23;
}

struct Pathway {
  int p, q, m;  // plus, plus, minus
  Slot eg, fe, a;
};

constexpr std::array<Pathway, 3> kPathways{{
    {0, 1, 2, eg_dqc, fe_dqc, a_dqc},
    {0, 2, 1, eg_nr, fe_nr, a_nr},
    {1, 2, 0, eg_r, fe_r, a_r},
}};

const std::array<ComponentKey, kSlotCount>& key_table() {
  static const std::array<ComponentKey, kSlotCount> table = [] {
    std::array<ComponentKey, kSlotCount> t{};
    auto unit = [](int j) {
      std::array<int, 3> v{0, 0, 0};
      v[j] = 1;
      return v;
    };
    for (int j = 0; j < 3; ++j) {
      t[a1 + j] = ComponentKey::make(unit(j), unit(j), Species::alpha);
      t[e1 + j] = ComponentKey::make(unit(j), unit(j), Species::rho_eg);
    }
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (j == k) continue;
        std::array<int, 3> order{0, 0, 0}, phase{0, 0, 0};
        order[j] = order[k] = 1;
        phase[j] = 1;
        phase[k] = -1;
        t[ee_slot(j, k)] = ComponentKey::make(order, phase, Species::rho_ee);
        if (j < k) t[fg_slot(j, k)] = ComponentKey::make(order, order, Species::rho_fg);
      }
    }
    for (std::size_t c = 0; c < 3; ++c) {
      const auto v = phase_of(kCombinations[c]);
      t[kPathways[c].eg] = ComponentKey::make({1, 1, 1}, v, Species::rho_eg);
      t[kPathways[c].fe] = ComponentKey::make({1, 1, 1}, v, Species::rho_fe);
      t[kPathways[c].a] = ComponentKey::make({1, 1, 1}, v, Species::alpha);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::string_view to_string(Species species) {
  switch (species) {
    case Species::alpha: return "alpha";
    case Species::rho_eg: return "rho_eg";
    case Species::rho_ee: return "rho_ee";
    case Species::rho_fg: return "rho_fg";
    case Species::rho_fe: return "rho_fe";
  }
  return "?";
}

ComponentKey ComponentKey::make(std::array<int, 3> order, std::array<int, 3> phase, Species species) {
  for (int i = 0; i < 3; ++i) {
    if (order[i] < 0 || order[i] > 1) throw std::logic_error("ComponentKey: order index outside {0,1}");
    if (std::abs(phase[i]) > order[i] || (phase[i] - order[i]) % 2 != 0) {
      throw std::logic_error("ComponentKey: phase index violates the parity rule");
    }
  }
  return ComponentKey{order, phase, species, false};
}

ComponentKey ComponentKey::conjugated() const {
  ComponentKey k = *this;
  for (auto& v : k.phase) v = -v;
  k.conjugate = !conjugate;
  return k;
}

std::string ComponentKey::name() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*s%s(%d%d%d)[%d,%d,%d]", static_cast<int>(to_string(species).size()),
                to_string(species).data(), conjugate ? "*" : "", order[0], order[1], order[2], phase[0], phase[1],
                phase[2]);
  return buf;
}

std::string_view to_string(Combination c) {
  switch (c) {
    case Combination::dqc: return "2qc";
    case Combination::nr: return "nr";
    case Combination::r: return "r";
  }
  return "?";
}

std::array<int, 3> phase_of(Combination c) {
  switch (c) {
    case Combination::dqc: return {1, 1, -1};
    case Combination::nr: return {1, -1, 1};
    case Combination::r: return {-1, 1, 1};
  }
  return {};
}

Slot alpha_slot(Combination c) { return kPathways[static_cast<int>(c)].a; }

ComponentKey slot_key(Slot slot) { return key_table().at(slot); }

std::string_view slot_name(Slot slot) {
  static constexpr std::array<std::string_view, kSlotCount> names{
      "alpha_1", "alpha_2", "alpha_3", "eg_1",   "eg_2",   "eg_3",   "ee_12",    "ee_21",
      "ee_13",   "ee_31",   "ee_23",   "ee_32",  "fg_12",  "fg_13",  "fg_23",    "eg_2qc",
      "eg_nr",   "eg_r",    "fe_2qc",  "fe_nr",  "fe_r",   "alpha_2qc", "alpha_nr", "alpha_r"};
  return names.at(slot);
}

std::optional<Slot> find_slot(const ComponentKey& key) {
  const auto& table = key_table();
  for (int s = 0; s < kSlotCount; ++s) {
    if (table[s] == key) return static_cast<Slot>(s);
  }
  return std::nullopt;
}

cplx component_value(const State& state, const ComponentKey& key) {
  if (auto s = find_slot(key)) return state[*s];
  if (auto s = find_slot(key.conjugated())) return std::conj(state[*s]);
  throw std::out_of_range("component not propagated: " + key.name());
}

EngineModel EngineModel::build(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask) {
  const auto r = to_angular(derive_rates(params, pulses.omega_l, mask));
  EngineModel m;
  m.kc = r.r_c;
  m.rge = r.r_eg;
  m.ref = r.r_fe;
  m.rfg = r.r_fg;
  m.g = r.g_ge;
  m.gef = r.g_ef;
  m.beta = r.beta;
  m.nonlinear_scale = 1.0 / params.relative_molecule_count();
  m.eta = pulses.effective_eta(params);
  m.t = pulses.t;
  m.tau_w = pulses.tau_w;
  m.mask = mask;
  return m;
}

double EngineModel::fastest_rate() const {
  return std::max({std::abs(kc.imag()), std::abs(rge.imag()), std::abs(ref.imag()), std::abs(rfg.imag()), g, gef,
                   2.0 * kc.real(), 2.0 * rge.real(), 2.0 * ref.real(), rfg.real(), std::abs(beta), 1.0 / tau_w});
}

double drive_envelope(const EngineModel& model, int j, double t) {
  const double x = t - model.t[j];
  if (std::abs(x) > 12.0 * model.tau_w) return 0.0;
  return pulse_envelope(x, model.tau_w);
}

void derivative(const State& s, double t, const EngineModel& m, State& d) {
  const double G = m.g;
  const double Gef = m.gef;
  const auto& mask = m.mask;

  for (int j = 0; j < 3; ++j) {
    d[a1 + j] = -m.kc * s[a1 + j] - I * G * s[e1 + j] - m.eta[j] * drive_envelope(m, j, t);
    d[e1 + j] = -m.rge * s[e1 + j] - I * G * s[a1 + j];
  }

  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (j == k) continue;
      d[ee_slot(j, k)] = -I * G * s[a1 + j] * std::conj(s[e1 + k]) + I * G * std::conj(s[a1 + k]) * s[e1 + j];
    }
  }
  for (auto [j, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const Slot f = fg_slot(j, k);
    d[f] = -m.rfg * s[f] - I * Gef * (s[a1 + j] * s[e1 + k] + s[a1 + k] * s[e1 + j]);
  }

  for (std::size_t c = 0; c < 3; ++c) {
    const auto& pw = kPathways[c];
    const cplx ap = s[a1 + pw.p], aq = s[a1 + pw.q];
    const cplx am_conj = std::conj(s[a1 + pw.m]);
    const cplx ee_qm = s[ee_slot(pw.q, pw.m)], ee_pm = s[ee_slot(pw.p, pw.m)];
    const cplx fg = s[fg_slot(pw.p, pw.q)];
    const cplx contraction = ap * ee_qm + aq * ee_pm;

    cplx src_eg{}, src_fe{};
    if (mask.gsb_se) src_eg += 2.0 * I * G * contraction;
    if (mask.esa) src_fe += -I * Gef * contraction;
    if (mask.dqc_feed) {
      src_eg += -I * Gef * am_conj * fg;
      src_fe += I * G * am_conj * fg;
    }
    const bool eid_here = mask.eid && (kCombinations[c] != Combination::dqc || mask.eid_in_2qc);
    if (eid_here && m.beta != 0.0) {
      src_eg += -0.5 * m.beta * (s[e1 + pw.p] * ee_qm + s[e1 + pw.q] * ee_pm);
    }
    d[pw.eg] = -m.rge * s[pw.eg] - I * G * s[pw.a] + m.nonlinear_scale * src_eg;
    d[pw.fe] = -m.ref * s[pw.fe] + m.nonlinear_scale * src_fe;
    d[pw.a] = -m.kc * s[pw.a] - I * G * s[pw.eg] - I * Gef * s[pw.fe];
  }
}

State derivative(const State& state, double t, const EngineModel& model) {
  State out;
  derivative(state, t, model, out);
  return out;
}

State step_fixed(const State& state, double t, double dt, const EngineModel& model) {
  return rk4_step(state, t, dt, [&model](double tt, const State& y, State& dy) { derivative(y, tt, model, dy); });
}

void validate_step(double dt, const EngineModel& model) {
  if (!(dt > 0.0)) throw ConfigError("scan.dt", "must be > 0");
  const double product = dt * model.fastest_rate();
  if (product > 0.1) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "step too large: dt * fastest rate = %.3g exceeds 0.1", product);
    throw ConfigError("scan.dt", buf);
  }
}

std::vector<cplx> Trajectory::series(Slot slot) const {
  std::vector<cplx> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s[slot]);
  return out;
}

std::vector<cplx> Trajectory::series(const ComponentKey& key) const {
  std::vector<cplx> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(component_value(s, key));
  return out;
}

double start_time(const PulseTrain& pulses) {
  return *std::min_element(pulses.t.begin(), pulses.t.end()) - 8.0 * pulses.tau_w;
}

Trajectory propagate_sequence(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask,
                              double t_end, double dt, int record_stride) {
  params.validate();
  pulses.validate();
  if (record_stride < 1) throw ConfigError("scan.record_stride", "must be >= 1");
  const auto model = EngineModel::build(params, pulses, mask);
  validate_step(dt, model);

  const double t0 = start_time(pulses);
  if (!(t_end > t0)) throw ConfigError("scan.window_ps", "end time precedes the first pulse");
  const auto steps = static_cast<std::size_t>(std::ceil((t_end - t0) / dt - 1e-9));
  const std::size_t n_rec = steps / record_stride + 1;

  Trajectory traj;
  traj.t0 = t0;
  traj.dt_sample = dt * record_stride;
  traj.omega_l = pulses.omega_l;
  traj.samples.reserve(n_rec);

  State y{};
  traj.samples.push_back(y);
  for (std::size_t k = 0; k < (n_rec - 1) * record_stride; ++k) {
    y = step_fixed(y, t0 + static_cast<double>(k) * dt, dt, model);
    if ((k + 1) % record_stride == 0) traj.samples.push_back(y);
  }
  return traj;
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  out << "t_ps";
  for (int s = 0; s < kSlotCount; ++s) {
    const auto name = slot_name(static_cast<Slot>(s));
    out << ' ' << name << "_re " << name << "_im";
  }
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < traj.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9f", traj.time(i));
    out << buf;
    for (const auto& v : traj.samples[i]) {
      std::snprintf(buf, sizeof buf, " %.17g %.17g", v.real(), v.imag());
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace polariton2d
