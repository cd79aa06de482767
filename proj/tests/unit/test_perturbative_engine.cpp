#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "polariton2d/perturbative_engine.hpp"
#include "polariton2d/rk4.hpp"
#include "polariton2d/units.hpp"

using namespace polariton2d;

namespace {

PulseTrain pulses_at(double tau, double T) { return PulseTrain{}.with_delays(tau, T); }

Trajectory run(const SystemParams& p, const PulseTrain& pulses, const PathwayMask& mask = {}, double window = 10.0,
               double dt = 0.0005) {
  return propagate_sequence(p, pulses, mask, pulses.t[2] + window, dt, 10);
}

double peak(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

SystemParams harmonic() {
  SystemParams p;
  p.omega_fe = p.omega_e;
  p.delta_el = 0.0;
  p.gamma_ef = p.gamma_ge;
  return p;
}

}  // namespace

TEST_CASE("component keys obey parity and conjugation") {
  CHECK_NOTHROW(ComponentKey::make({1, 1, 1}, {1, 1, -1}, Species::alpha));
  CHECK_THROWS_AS(ComponentKey::make({1, 0, 0}, {0, 0, 0}, Species::alpha), std::logic_error);
  CHECK_THROWS_AS(ComponentKey::make({1, 1, 0}, {2, 0, 0}, Species::rho_ee), std::logic_error);
  CHECK_THROWS_AS(ComponentKey::make({2, 0, 0}, {1, 0, 0}, Species::rho_ee), std::logic_error);

  const auto k = ComponentKey::make({1, 1, 1}, {1, -1, 1}, Species::alpha);
  const auto c = k.conjugated();
  CHECK(c.conjugate);
  CHECK(c.phase == std::array<int, 3>{-1, 1, -1});
  CHECK(c.conjugated() == k);
}

TEST_CASE("slot table") {
  for (int s = 0; s < kSlotCount; ++s) {
    const auto key = slot_key(static_cast<Slot>(s));
    REQUIRE(find_slot(key).has_value());
    CHECK(*find_slot(key) == s);
    CHECK(!find_slot(key.conjugated()).has_value());
  }
  CHECK(phase_of(Combination::dqc) == std::array<int, 3>{1, 1, -1});
  CHECK(phase_of(Combination::nr) == std::array<int, 3>{1, -1, 1});
  CHECK(phase_of(Combination::r) == std::array<int, 3>{-1, 1, 1});
  CHECK(slot_key(ee12).phase == std::array<int, 3>{1, -1, 0});

  State s{};
  s[a_nr] = cplx(1.0, 2.0);
  CHECK(component_value(s, slot_key(a_nr).conjugated()) == cplx(1.0, -2.0));
  CHECK(component_value(s, slot_key(a_nr)) == cplx(1.0, 2.0));
  CHECK_THROWS_AS(component_value(s, ComponentKey::make({1, 1, 0}, {1, 1, 0}, Species::alpha)), std::out_of_range);
}

TEST_CASE("rk4 reproduces an exponential with fifth-order local error") {
  const cplx lambda(-1.3, 4.0);
  auto rhs = [&](double, const std::array<cplx, 1>& y, std::array<cplx, 1>& dy) { dy[0] = lambda * y[0]; };
  double prev = 0.0;
  for (double dt : {0.02, 0.01, 0.005}) {
    const auto y = rk4_step<1>({cplx(1.0)}, 0.0, dt, rhs);
    const double err = std::abs(y[0] - std::exp(lambda * dt));
    CHECK(err < 1e-6);
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(32.0).epsilon(0.05));
    prev = err;
  }
  const auto same = rk4_step<1>({cplx(0.0)}, 0.0, 0.1, rhs);
  CHECK(same[0] == cplx{});
}

TEST_CASE("no drive long before the first pulse") {
  const auto m = EngineModel::build(SystemParams{}, pulses_at(0.5, 0.5), PathwayMask{});
  const State zero{};
  const auto d = derivative(zero, -5.0, m);
  for (const auto& x : d) CHECK(x == cplx{});
  CHECK(drive_envelope(m, 0, -5.0) == 0.0);
  CHECK(drive_envelope(m, 0, 0.0) == doctest::Approx(pulse_envelope(0.0, m.tau_w)));
}

TEST_CASE("step bound") {
  const auto m = EngineModel::build(SystemParams{}, pulses_at(0.0, 0.0), PathwayMask{});
  CHECK_NOTHROW(validate_step(0.0005, m));
  try {
    validate_step(0.5, m);
    FAIL("dt = 0.5 ps accepted");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "scan.dt");
  }
}

TEST_CASE("decoupled limit") {
  SystemParams p;
  p.g_collective = 0.0;
  const auto pulses = pulses_at(0.3, 0.4);
  const auto traj = run(p, pulses);
  for (int s = 0; s < kSlotCount; ++s) {
    const auto key = slot_key(static_cast<Slot>(s));
    if (key.species == Species::alpha && (s == a1 || s == a2 || s == a3)) continue;
    INFO(slot_name(static_cast<Slot>(s)));
    CHECK(peak(traj.series(static_cast<Slot>(s))) == 0.0);
  }
  // after the last pulse the cavity field is a bare damped oscillator
  const auto m = EngineModel::build(p, pulses, PathwayMask{});
  const auto a = traj.series(a3);
  const std::size_t i = static_cast<std::size_t>((pulses.t[2] + 2.0 - traj.t0) / traj.dt_sample);
  const std::size_t j = i + 100;
  const cplx expected = a[i] * std::exp(-m.kc * (traj.time(j) - traj.time(i)));
  CHECK(std::abs(a[j] - expected) < 1e-9 * std::abs(a[i]));
}

TEST_CASE("components of silent pulses stay zero") {
  PulseTrain pulses = pulses_at(0.2, 0.3);
  pulses.eta = {1.0, 0.0, 0.0};
  const auto traj = run(SystemParams{}, pulses);
  CHECK(peak(traj.series(a1)) > 0.0);
  CHECK(peak(traj.series(e1)) > 0.0);
  for (Slot s : {a2, a3, e2, e3, ee12, ee21, ee13, ee31, ee23, ee32, fg12, fg13, fg23, eg_dqc, eg_nr, eg_r, fe_dqc,
                 fe_nr, fe_r, a_dqc, a_nr, a_r}) {
    INFO(slot_name(s));
    CHECK(peak(traj.series(s)) == 0.0);
  }
}

TEST_CASE("each component scales with its pulse orders") {
  const auto pulses = pulses_at(0.2, 0.3);
  auto scaled = pulses;
  scaled.eta = {2.0, 1.0, 3.0};
  const auto a = run(SystemParams{}, pulses, {}, 3.0);
  const auto b = run(SystemParams{}, scaled, {}, 3.0);
  for (int s = 0; s < kSlotCount; ++s) {
    const auto key = slot_key(static_cast<Slot>(s));
    double factor = 1.0;
    for (int j = 0; j < 3; ++j) factor *= std::pow(scaled.eta[j], key.order[j]);
    const auto x = a.series(static_cast<Slot>(s));
    const auto y = b.series(static_cast<Slot>(s));
    double dev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, std::abs(y[i] - factor * x[i]));
    INFO(slot_name(static_cast<Slot>(s)));
    CHECK(dev <= 1e-12 * factor * peak(x));
  }
}

TEST_CASE("conjugate-pair populations stay conjugate") {
  const auto traj = run(SystemParams{}, pulses_at(0.15, 0.2), {}, 2.0);
  const auto x = traj.series(ee12), y = traj.series(ee21);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x[i] - std::conj(y[i])) <= 1e-13 * (1.0 + std::abs(x[i])));
}

TEST_CASE("pathway sources add up when EID is off") {
  const auto pulses = pulses_at(0.1, 0.2);
  const SystemParams p;
  PathwayMask only_gsb{true, false, false, false, false, false};
  PathwayMask only_esa{false, true, false, false, false, false};
  PathwayMask only_dqc{false, false, true, false, false, false};
  const auto full = run(p, pulses, {}, 3.0);
  const auto g = run(p, pulses, only_gsb, 3.0);
  const auto e = run(p, pulses, only_esa, 3.0);
  const auto d = run(p, pulses, only_dqc, 3.0);
  for (Slot s : {a_dqc, a_nr, a_r, eg_nr, fe_r}) {
    const auto f = full.series(s), x = g.series(s), y = e.series(s), z = d.series(s);
    double dev = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) dev = std::max(dev, std::abs(f[i] - x[i] - y[i] - z[i]));
    INFO(slot_name(s));
    CHECK(dev <= 1e-12 * peak(f));
  }
}

TEST_CASE("harmonic limit cancels every third-order field") {
  const auto pulses = pulses_at(0.5, 0.5);
  SystemParams anh = harmonic();
  anh.omega_fe = anh.omega_e - 15.0;
  const auto h = run(harmonic(), pulses);
  const auto a = run(anh, pulses);
  for (Combination c : kCombinations) {
    const Slot s = alpha_slot(c);
    const double ref = peak(a.series(s));
    INFO(to_string(c));
    CHECK(ref > 1e-3);
    CHECK(peak(h.series(s)) <= 1e-6 * ref);
  }
}

TEST_CASE("third-order field persists over the polariton lifetime and then decays") {
  const auto traj = run(SystemParams{}, pulses_at(0.0, 0.0), {}, 17.0);
  for (Combination c : kCombinations) {
    const auto x = traj.series(alpha_slot(c));
    const double top = peak(x);
    CHECK(top > 1e-3);
    // slowest amplitude decay is the molecular gamma_ge / 2 (~0.56 1/ps)
    const auto late = static_cast<std::size_t>((15.0 - traj.t0) / traj.dt_sample);
    double tail = 0.0;
    for (std::size_t i = late; i < x.size(); ++i) tail = std::max(tail, std::abs(x[i]));
    CHECK(tail < 1e-2 * top);
    const auto early = static_cast<std::size_t>((0.5 - traj.t0) / traj.dt_sample);
    CHECK(std::abs(x[early]) > 0.05 * top);
  }
}

TEST_CASE("halving dt leaves the third-order field unchanged") {
  const auto pulses = pulses_at(0.5, 0.5);
  const auto coarse = propagate_sequence(SystemParams{}, pulses, {}, 4.0, 0.0005, 10);
  const auto fine = propagate_sequence(SystemParams{}, pulses, {}, 4.0, 0.00025, 20);
  REQUIRE(coarse.size() == fine.size());
  for (Combination c : kCombinations) {
    const auto x = coarse.series(alpha_slot(c)), y = fine.series(alpha_slot(c));
    double dev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, std::abs(x[i] - y[i]));
    CHECK(dev <= 1e-6 * peak(y));
  }
}

TEST_CASE("molecule count scales the nonlinear sources only") {
  const auto pulses = pulses_at(0.2, 0.2);
  SystemParams p;
  p.beta_eid = 4.0;
  // twice the cavity length at twice the bare linewidth: same effective kappa,
  // twice the molecules; drive raised to keep the effective amplitude
  SystemParams q = p;
  q.kappa_scale = 2.0;
  q.kappa = 2.0 * p.kappa;
  auto qp = pulses;
  qp.eta = {std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)};
  const auto a = run(p, pulses, {}, 2.0);
  const auto b = run(q, qp, {}, 2.0);
  for (int s = 0; s < kSlotCount; ++s) {
    const auto key = slot_key(static_cast<Slot>(s));
    const int order = key.order[0] + key.order[1] + key.order[2];
    const double factor = order == 3 ? 0.5 : 1.0;
    const auto x = a.series(static_cast<Slot>(s)), y = b.series(static_cast<Slot>(s));
    double dev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, std::abs(y[i] - factor * x[i]));
    INFO(slot_name(static_cast<Slot>(s)));
    CHECK(dev <= 1e-12 * peak(x));
  }
}

TEST_CASE("trajectory text output") {
  const auto traj = propagate_sequence(SystemParams{}, pulses_at(0.0, 0.0), {}, 0.2, 0.0005, 10);
  std::ostringstream out;
  write_trajectory(out, traj);
  const auto text = out.str();
  CHECK(text.rfind("t_ps alpha_1_re alpha_1_im", 0) == 0);
  const auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(static_cast<std::size_t>(lines) == traj.size() + 1);
}

TEST_CASE("identical inputs give identical trajectories") {
  const auto a = run(SystemParams{}, pulses_at(0.1, 0.1), {}, 1.0);
  const auto b = run(SystemParams{}, pulses_at(0.1, 0.1), {}, 1.0);
  CHECK(a.samples == b.samples);
}
