#include "polariton2d/meanfield_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polariton2d/parallel.hpp"
#include "polariton2d/rk4.hpp"
#include "polariton2d/units.hpp"

namespace polariton2d {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr int G_ = 0, E_ = 1, F_ = 2;

struct MeanFieldModel {
  EngineModel base;
  std::array<cplx, 3> drive_phase{};  // e^{-i phi_j}
  std::array<double, 3> level{};      // rotating-frame energies
  double gamma_ge = 0.0;
  double gamma_ef = 0.0;
  double sqrt_n = 1.0;  // sqrt of the relative molecule count
};

void mf_derivative(const MeanFieldVector& y, double t, const MeanFieldModel& m, MeanFieldVector& dy) {
  const cplx alpha = y[0];
  const cplx* rho = y.data() + 1;
  cplx* drho = dy.data() + 1;
  const double G = m.base.g, Gef = m.base.gef;

  cplx drive{};
  for (int j = 0; j < 3; ++j) drive += m.base.eta[j] * drive_envelope(m.base, j, t) * m.drive_phase[j];
  // rho is per molecule; the field couples to all N of them
  dy[0] = -m.base.kc * alpha - I * m.sqrt_n * (G * rho[3 * E_ + G_] + Gef * rho[3 * F_ + E_]) - drive;
  const cplx a = alpha / m.sqrt_n;

  std::array<cplx, 9> H{};
  H[3 * G_ + G_] = m.level[0];
  H[3 * E_ + E_] = m.level[1];
  H[3 * F_ + F_] = m.level[2];
  H[3 * E_ + G_] = G * a;
  H[3 * G_ + E_] = G * std::conj(a);
  H[3 * F_ + E_] = Gef * a;
  H[3 * E_ + F_] = Gef * std::conj(a);

  const double gamma_eg = 0.5 * (m.gamma_ge + m.base.beta * rho[3 * E_ + E_].real());
  const double gamma_fe = 0.5 * m.gamma_ef;
  const double gamma_fg = m.gamma_ge + m.gamma_ef;
  const double damp[9] = {0.0, gamma_eg, gamma_fg, gamma_eg, 0.0, gamma_fe, gamma_fg, gamma_fe, 0.0};

  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      cplx comm{};
      for (int k = 0; k < 3; ++k) comm += H[3 * r + k] * rho[3 * k + c] - rho[3 * r + k] * H[3 * k + c];
      drho[3 * r + c] = -I * comm - damp[3 * r + c] * rho[3 * r + c];
    }
  }
}

void update_diagnostics(const MeanFieldVector& y, MeanFieldDiagnostics& d) {
  const cplx* rho = y.data() + 1;
  for (int r = 0; r < 3; ++r) {
    for (int c = r; c < 3; ++c) {
      d.max_hermiticity_error = std::max(d.max_hermiticity_error, std::abs(rho[3 * r + c] - std::conj(rho[3 * c + r])));
    }
    d.min_population = std::min(d.min_population, rho[4 * r].real());
    d.max_population = std::max(d.max_population, rho[4 * r].real());
  }
  const cplx trace = rho[0] + rho[4] + rho[8];
  d.max_trace_error = std::max(d.max_trace_error, std::abs(trace - 1.0));
}

void merge(MeanFieldDiagnostics& into, const MeanFieldDiagnostics& from) {
  into.max_hermiticity_error = std::max(into.max_hermiticity_error, from.max_hermiticity_error);
  into.max_trace_error = std::max(into.max_trace_error, from.max_trace_error);
  into.min_population = std::min(into.min_population, from.min_population);
  into.max_population = std::max(into.max_population, from.max_population);
}

int species_index(Species s) {
  switch (s) {
    case Species::alpha: return 0;
    case Species::rho_eg: return 1 + 3 * E_ + G_;
    case Species::rho_ee: return 1 + 3 * E_ + E_;
    case Species::rho_fg: return 1 + 3 * F_ + G_;
    case Species::rho_fe: return 1 + 3 * F_ + E_;
  }
  return 0;
}

}  // namespace

MeanFieldState MeanFieldTrajectory::state(std::size_t i) const {
  MeanFieldState s;
  const auto& y = samples.at(i);
  s.alpha = y[0];
  std::copy(y.begin() + 1, y.end(), s.rho.begin());
  s.time = t0 + static_cast<double>(i) * dt_sample;
  return s;
}

std::vector<cplx> MeanFieldTrajectory::series(Species species) const {
  const int idx = species_index(species);
  std::vector<cplx> out;
  out.reserve(samples.size());
  for (const auto& y : samples) out.push_back(y[idx]);
  return out;
}

MeanFieldTrajectory propagate_meanfield(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask,
                                        double t_end, double dt, int record_stride) {
  params.validate();
  pulses.validate();
  if (record_stride < 1) throw ConfigError("scan.record_stride", "must be >= 1");

  MeanFieldModel m;
  m.base = EngineModel::build(params, pulses, mask);
  validate_step(dt, m.base);
  for (int j = 0; j < 3; ++j) m.drive_phase[j] = std::polar(1.0, -pulses.phi[j]);
  const double dge = -m.base.rge.imag();
  const double def = -m.base.ref.imag();
  m.level = {0.0, -dge, -(dge + def)};
  m.gamma_ge = 2.0 * m.base.rge.real();
  m.gamma_ef = 2.0 * m.base.ref.real();
  m.sqrt_n = std::sqrt(params.relative_molecule_count());

  const double t0 = start_time(pulses);
  if (!(t_end > t0)) throw ConfigError("scan.window_ps", "end time precedes the first pulse");
  const auto steps = static_cast<std::size_t>(std::ceil((t_end - t0) / dt - 1e-9));
  const std::size_t n_rec = steps / record_stride + 1;

  MeanFieldTrajectory traj;
  traj.t0 = t0;
  traj.dt_sample = dt * record_stride;
  traj.samples.reserve(n_rec);

  MeanFieldVector y{};
  y[1] = 1.0;
  update_diagnostics(y, traj.diagnostics);
  traj.samples.push_back(y);
  auto rhs = [&m](double t, const MeanFieldVector& v, MeanFieldVector& dv) { mf_derivative(v, t, m, dv); };
  for (std::size_t k = 0; k < (n_rec - 1) * record_stride; ++k) {
    y = rk4_step(y, t0 + static_cast<double>(k) * dt, dt, rhs);
    update_diagnostics(y, traj.diagnostics);
    if ((k + 1) % record_stride == 0) traj.samples.push_back(y);
  }
  return traj;
}

PhaseRuns run_phase_grid(const SystemParams& params, const PulseTrain& pulses, const PathwayMask& mask, int n_phi,
                         double eta, double t_end, double dt, int record_stride, unsigned threads) {
  if (n_phi < 1) throw ConfigError("scan.n_phi", "must be >= 1");
  PhaseRuns out;
  out.n_phi = n_phi;
  out.eta = {eta, eta, eta};
  out.molecule_count = params.relative_molecule_count();
  const std::size_t n = static_cast<std::size_t>(n_phi) * n_phi * n_phi;
  out.runs.resize(n);

  PulseTrain base = pulses;
  const double scale = params.drive_scale();
  for (auto& e : base.eta) e = eta / scale;

  parallel_for(n, threads, [&](std::size_t idx) {
    PulseTrain p = base;
    const std::size_t k[3] = {idx / (n_phi * n_phi), (idx / n_phi) % n_phi, idx % n_phi};
    for (int j = 0; j < 3; ++j) p.phi[j] = kTwoPi * static_cast<double>(k[j]) / n_phi;
    out.runs[idx] = propagate_meanfield(params, p, mask, t_end, dt, record_stride);
  });
  return out;
}

bool aliasing_risk(int n_phi, const std::array<int, 3>& phase) {
  int vmax = 0;
  for (int v : phase) vmax = std::max(vmax, std::abs(v));
  return n_phi < 2 * vmax + 1;
}

std::vector<cplx> extract_component(const PhaseRuns& runs, const std::array<int, 3>& phase,
                                    const std::array<int, 3>& order, Species species) {
  const int n = runs.n_phi;
  if (n < 1 || runs.runs.size() != static_cast<std::size_t>(n) * n * n) {
    throw std::invalid_argument("extract_component: incomplete phase grid");
  }
  const std::size_t len = runs.runs.front().samples.size();
  for (const auto& r : runs.runs) {
    if (r.samples.size() != len) throw std::invalid_argument("extract_component: runs differ in length");
  }
  const int idx = species_index(species);

  double norm = 1.0;
  for (int j = 0; j < 3; ++j) norm *= std::pow(runs.eta[j], order[j]);
  norm *= static_cast<double>(n) * n * n;

  std::vector<cplx> out(len, cplx{});
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) {
      for (int k3 = 0; k3 < n; ++k3) {
        // integer phase index reduced mod n keeps the weights exact roots of unity
        const int m = ((phase[0] * k1 + phase[1] * k2 + phase[2] * k3) % n + n) % n;
        const cplx w = std::polar(1.0, kTwoPi * m / n);
        const auto& samples = runs.runs[(k1 * n + k2) * n + k3].samples;
        for (std::size_t i = 0; i < len; ++i) out[i] += w * samples[i][idx];
      }
    }
  }
  // collective (engine) normalisation of the per-molecule matrix elements
  switch (species) {
    case Species::rho_eg:
    case Species::rho_fe: norm /= std::sqrt(runs.molecule_count); break;
    case Species::rho_ee:
    case Species::rho_fg: norm /= runs.molecule_count; break;
    case Species::alpha: break;
  }
  for (auto& v : out) v /= norm;
  return out;
}

bool OracleReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const OracleRow& r) { return r.pass; });
}

double oracle_tolerance(int total_order) { return total_order >= 3 ? 1e-2 : 1e-3; }

OracleReport validate_against_engine(const Config& config, unsigned threads) {
  const auto& scan = config.scan;
  PathwayMask mask;
  mask.disable_ef_coupling = scan.mask.disable_ef_coupling;
  mask.eid_in_2qc = true;

  const double t_end = *std::max_element(config.pulses.t.begin(), config.pulses.t.end()) + scan.window_ps;

  PulseTrain unit = config.pulses;
  for (auto& e : unit.eta) e = 1.0 / config.system.drive_scale();
  const auto traj = propagate_sequence(config.system, unit, mask, t_end, scan.dt, scan.record_stride);
  const auto runs = run_phase_grid(config.system, config.pulses, mask, scan.n_phi, scan.oracle_eta, t_end, scan.dt,
                                   scan.record_stride, threads);

  OracleReport report;
  for (const auto& r : runs.runs) merge(report.diagnostics, r.diagnostics);
  for (int s = 0; s < kSlotCount; ++s) {
    const auto key = slot_key(static_cast<Slot>(s));
    const auto ref = traj.series(static_cast<Slot>(s));
    const auto est = extract_component(runs, key.phase, key.order, key.species);
    double peak = 0.0, dev = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      peak = std::max(peak, std::abs(ref[i]));
      dev = std::max(dev, std::abs(est[i] - ref[i]));
    }
    OracleRow row;
    row.component = std::string(slot_name(static_cast<Slot>(s)));
    row.total_order = key.order[0] + key.order[1] + key.order[2];
    row.max_relative_deviation = peak > 0.0 ? dev / peak : dev;
    row.tolerance = oracle_tolerance(row.total_order);
    row.pass = row.max_relative_deviation <= row.tolerance;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace polariton2d
