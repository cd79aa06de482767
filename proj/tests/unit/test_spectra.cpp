#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "polariton2d/fft.hpp"
#include "polariton2d/heatmap.hpp"
#include "polariton2d/spectra.hpp"
#include "polariton2d/spectrum_io.hpp"
#include "polariton2d/units.hpp"

using namespace polariton2d;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "polariton2d_test_spectra";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t argmax_abs(const std::vector<cplx>& v) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  return best;
}

SpectrumGrid small_grid() {
  SpectrumGrid g;
  g.kind = SpectrumKind::oneq_sum;
  g.label = "oneq_sum";
  g.axis_a = {1950.0, 1960.0, 1970.0};
  g.axis_b = {1955.0, 1975.0, 1995.0, 2015.0};
  for (std::size_t i = 0; i < 12; ++i) g.values.emplace_back(std::sin(0.7 * i + 0.1), std::cos(1.3 * i) / 3.0);
  g.metadata["T_ps"] = "8";
  return g;
}

}  // namespace

TEST_CASE("DFT conventions: Parseval and kernel sign") {
  std::vector<cplx> x(256);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = cplx(std::cos(0.3 * k * k), std::sin(0.11 * k));
  const auto X = dft_positive(x);
  double ex = 0.0, eX = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    ex += std::norm(x[k]);
    eX += std::norm(X[k]);
  }
  CHECK(std::abs(eX / x.size() - ex) <= 1e-9 * ex);

  // e^{-2 pi i 5 k / N} lands in bin 5 under the e^{+i} kernel
  std::vector<cplx> tone(64);
  for (std::size_t k = 0; k < 64; ++k) tone[k] = std::polar(1.0, -kTwoPi * 5.0 * k / 64.0);
  const auto T = dft_positive(tone);
  CHECK(argmax_abs(T) == 5);
  CHECK(std::abs(T[5]) == doctest::Approx(64.0));

  // real input gives a Hermitian spectrum
  std::vector<cplx> real(32);
  for (std::size_t k = 0; k < 32; ++k) real[k] = std::exp(-0.1 * k) * std::cos(0.4 * k);
  const auto R = dft_positive(real);
  for (std::size_t m = 1; m < 32; ++m) CHECK(std::abs(R[m] - std::conj(R[32 - m])) < 1e-12);
}

TEST_CASE("zero input gives a zero spectrum") {
  const std::vector<cplx> zero(400);
  const auto s = detection_spectrum(zero, -0.8, 0.005, 1983.0, 0.0, 0.1, 1.0, 2, Apodization::none, 150.0);
  REQUIRE(!s.values.empty());
  for (const auto& v : s.values) CHECK(v == cplx{});
}

TEST_CASE("detection transform of a damped exponential is a Lorentzian") {
  const double tw = 0.1, dt = 0.005, window = 30.0;
  const double w0 = wavenumber_to_angular(12.0), gamma = wavenumber_to_angular(6.0);
  const double t0 = -0.8;
  std::vector<cplx> series(static_cast<std::size_t>((window + 2.0) / dt));
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double t = t0 + k * dt;
    series[k] = t < 0.0 ? cplx{} : std::exp(cplx(-0.5 * gamma, -w0) * t);
  }
  const auto s = detection_spectrum(series, t0, dt, 1983.0, 0.0, tw, window, 4, Apodization::none, 150.0);
  const std::size_t top = argmax_abs(s.values);
  const double step = s.omega[1] - s.omega[0];
  CHECK(std::abs(s.omega[top] - (1983.0 + 12.0)) <= step);
  // the rectangle rule over the jump at t = 0 adds a flat dt/2, well inside 1% of the peak
  const double height = 2.0 / gamma;
  CHECK(std::abs(s.values[top]) == doctest::Approx(height).epsilon(1e-2));
  for (std::size_t i = 0; i < s.omega.size(); ++i) {
    const double w = s.offset(i);
    const cplx exact = 1.0 / cplx(0.5 * gamma, -(w - w0));
    INFO("omega " << s.omega[i]);
    CHECK(std::abs(s.values[i] - exact) <= 1e-2 * height);
  }
  // half width at half maximum of |F|^2 is gamma / 2
  const double half = std::norm(s.values[top]) / 2.0;
  std::size_t r = top;
  while (r + 1 < s.values.size() && std::norm(s.values[r]) > half) ++r;
  CHECK(std::abs((s.omega[r] - s.omega[top]) - 3.0) <= 1.5 * step);
}

TEST_CASE("detection window must fit in the trajectory") {
  const std::vector<cplx> shortseries(10);
  CHECK_THROWS_AS(detection_spectrum(shortseries, 0.0, 0.005, 1983.0, 0.0, 0.1, 30.0, 2, Apodization::none, 150.0),
                  std::invalid_argument);
}

TEST_CASE("apodization weights") {
  CHECK(apodization_weight(Apodization::none, 3, 10) == 1.0);
  CHECK(apodization_weight(Apodization::half_hann, 0, 10) == 1.0);
  CHECK(apodization_weight(Apodization::half_hann, 9, 10) == doctest::Approx(0.0));
  CHECK(apodization_weight(Apodization::half_hann, 6, 13) == doctest::Approx(0.5));
}

TEST_CASE("delay transform sign convention") {
  const double w0 = wavenumber_to_angular(20.0), gamma = 0.5;
  std::vector<double> tau;
  for (int k = 0; k < 1200; ++k) tau.push_back(0.01 * k);
  const std::vector<double> w3{1983.0};
  std::vector<std::vector<cplx>> down, up, zero;
  for (double t : tau) {
    down.push_back({std::exp(cplx(-gamma, -w0) * t)});
    up.push_back({std::exp(cplx(-gamma, w0) * t)});
    zero.push_back({cplx{}});
  }
  const auto a = ft_excitation(down, tau, w3, 1983.0, 150.0, 2, Apodization::none, SpectrumKind::oneq_nr);
  const auto b = ft_excitation(up, tau, w3, 1983.0, 150.0, 2, Apodization::none, SpectrumKind::oneq_nr);
  const double step = a.axis_a[1] - a.axis_a[0];
  CHECK(std::abs(a.axis_a[a.argmax_abs_real().first] - 2003.0) <= step);
  // e^{(+i w0 - gamma) tau} lands at -w0 under the e^{+i w tau} kernel
  CHECK(std::abs(b.axis_a[b.argmax_abs_real().first] - 1963.0) <= step);

  const auto z = ft_excitation(zero, tau, w3, 1983.0, 150.0, 2, Apodization::none, SpectrumKind::oneq_nr);
  CHECK(z.max_abs_real() == 0.0);

  const auto c = ft_waiting(down, tau, w3, 1983.0, 150.0, 2, Apodization::none);
  CHECK(c.kind == SpectrumKind::twoqc);
  CHECK(std::abs(c.axis_a[c.argmax_abs_real().first] - (2.0 * 1983.0 + 20.0)) <= step);
  CHECK(c.axis_a.front() >= 2.0 * 1983.0 - 300.0 - 1e-9);
  CHECK(c.axis_a.back() <= 2.0 * 1983.0 + 300.0 + 1e-9);
  CHECK(c.metadata.at("delay_decayed") == "true");

  CHECK_THROWS_AS(ft_excitation({{cplx{}}}, {0.0}, w3, 1983.0, 150.0, 2, Apodization::none, SpectrumKind::oneq_nr),
                  std::invalid_argument);
  CHECK_THROWS_AS(ft_excitation({{cplx{}}, {cplx{}}, {cplx{}}}, {0.0, 0.1, 0.3}, w3, 1983.0, 150.0, 2,
                                Apodization::none, SpectrumKind::oneq_nr),
                  std::invalid_argument);
}

TEST_CASE("differential transmission") {
  Spectrum1D a1, a3;
  a1.omega_l = a3.omega_l = 1983.0;
  for (int i = -20; i <= 20; ++i) {
    a1.omega.push_back(1983.0 + 10.0 * i);
    a1.values.emplace_back(1.0 + 0.01 * i, -0.3);
  }
  a3.omega = a1.omega;
  a3.values.assign(a1.values.size(), cplx{});
  auto dT = differential_transmission(a1, a3, 0.1, 11.0, 1.0, 1.0, 1e-3);
  for (double v : dT.dT) CHECK(v == 0.0);

  for (std::size_t i = 0; i < a3.values.size(); ++i) a3.values[i] = cplx(0.2, 0.05 * i);
  dT = differential_transmission(a1, a3, 0.1, 11.0, 2.0, 0.5, 1e-3);
  const double k2 = 0.5 * wavenumber_to_angular(11.0);
  for (std::size_t i = 0; i < dT.dT.size(); ++i) {
    CHECK(dT.dT[i] == dT.signal[i].real());
    const double f = pulse_spectrum(a1.offset(i), 0.1);
    if (f < 1e-3) {
      CHECK(dT.masked[i]);
      CHECK(dT.dT[i] == 0.0);
    } else {
      const double expect = 2.0 * k2 * k2 * (std::conj(a1.values[i]) * a3.values[i]).real() / (f * f);
      CHECK(dT.dT[i] == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  a3.omega[3] += 1.0;
  CHECK_THROWS_AS(differential_transmission(a1, a3, 0.1, 11.0, 1.0, 1.0, 1e-3), std::invalid_argument);
}

TEST_CASE("polariton frequencies") {
  SystemParams p;
  const auto pf = polariton_frequencies(p);
  const double half_split = std::sqrt(18.5 * 18.5 - 1.25 * 1.25);
  CHECK(half_split == doctest::Approx(18.457).epsilon(1e-4));
  CHECK(pf.omega_lp == doctest::Approx(1983.0 - half_split).epsilon(1e-12));
  CHECK(pf.omega_up == doctest::Approx(1983.0 + half_split).epsilon(1e-12));
  CHECK(pf.omega_up - pf.omega_lp == doctest::Approx(36.92).epsilon(1e-3));
  CHECK(pf.gamma_lp == doctest::Approx(4.25));
  CHECK(pf.gamma_up == doctest::Approx(4.25));

  p.g_collective = 0.0;
  p.omega_e = 1990.0;
  const auto bare = polariton_frequencies(p);
  CHECK(bare.omega_lp == doctest::Approx(1983.0));
  CHECK(bare.gamma_lp == doctest::Approx(5.5));
  CHECK(bare.omega_up == doctest::Approx(1990.0));
  CHECK(bare.gamma_up == doctest::Approx(3.0));

  double last = 0.0;
  for (double c : {0.5, 1.0, 2.0}) {
    SystemParams q;
    q.conc_scale = c;
    const auto f = polariton_frequencies(q);
    CHECK(f.omega_up - f.omega_lp > last);
    last = f.omega_up - f.omega_lp;
  }

  SystemParams ep;
  ep.g_collective = 1.25;  // |kappa - gamma| / 4 on resonance
  CHECK_THROWS_AS(polariton_frequencies(ep), std::domain_error);
}

TEST_CASE("propagated probe field matches the closed-form linear response") {
  const SystemParams p;
  const PulseTrain pulses;
  const auto traj = propagate_sequence(p, pulses, {}, 30.0 + 0.02, 0.0005, 10);
  const auto s = detection_spectrum(traj, a3, 0.0, pulses.tau_w, 30.0, 2, Apodization::none, 150.0);
  const auto exact = linear_response(s.omega, p, pulses.omega_l, pulses.tau_w);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.omega.size(); ++i) {
    if (pulse_spectrum(s.offset(i), pulses.tau_w) < 1e-3) continue;
    worst = std::max(worst, std::abs(s.values[i] - exact[i]) / std::abs(exact[i]));
  }
  CHECK(worst <= 1e-4);

  const auto T = linear_transmission(s, pulses.tau_w, p.kappa, 1e-3);
  const auto pf = polariton_frequencies(p);
  const double step = s.omega[1] - s.omega[0];
  std::vector<double> lower(T), upper(T);
  for (std::size_t i = 0; i < T.size(); ++i) (s.omega[i] < 1983.0 ? upper[i] : lower[i]) = 0.0;
  CHECK(std::abs(argmax_location(s.omega, lower) - pf.omega_lp) <= step);
  CHECK(std::abs(argmax_location(s.omega, upper) - pf.omega_up) <= step);
}

TEST_CASE("stationary pathway contributions") {
  SystemParams h;
  h.omega_fe = h.omega_e;
  h.delta_el = 0.0;
  h.gamma_ef = h.gamma_ge;
  std::vector<double> omega;
  for (int i = 0; i <= 200; ++i) omega.push_back(1933.0 + 0.5 * i);
  const auto c = stationary_contributions(omega, 0.05, h, 1983.0, 0.1);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    CHECK(std::abs(c.gsb_se[i] + c.esa[i]) <= 1e-12 * std::abs(c.gsb_se[i]));
    CHECK(std::abs(c.dqc[i]) <= 1e-15);
  }

  const auto z = stationary_contributions(omega, 0.0, SystemParams{}, 1983.0, 0.1);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    CHECK(z.gsb_se[i] == cplx{});
    CHECK(z.esa[i] == cplx{});
  }

  SystemParams a = h;
  a.omega_fe = a.omega_e - 15.0;
  const auto s = stationary_contributions(omega, 0.05, a, 1983.0, 0.1);
  const auto pf = polariton_frequencies(a);
  auto sum_at = [&](double w) {
    const auto i = static_cast<std::size_t>(std::lround((w - omega.front()) / 0.5));
    return std::abs(s.gsb_se[i] + s.esa[i]) / std::abs(s.gsb_se[i]);
  };
  CHECK(sum_at(pf.omega_lp) > 0.05);
  CHECK(sum_at(pf.omega_up) > 0.05);
}

TEST_CASE("grid helpers") {
  auto g = small_grid();
  g.values[5] = cplx(-4.0, 0.0);
  CHECK(g.max_abs_real() == 4.0);
  CHECK(g.argmax_abs_real() == std::pair<std::size_t, std::size_t>{1, 1});
  const auto n = g.normalized();
  CHECK(n.values[5] == cplx(-1.0, 0.0));
  CHECK(n.metadata.at("normalization_factor") == "4");
}

TEST_CASE("text and binary grid files round-trip") {
  const auto g = small_grid();
  const auto txt = scratch("grid.txt").string();
  const auto bin = scratch("grid.bin").string();
  write_grid_text(txt, g);
  write_grid_binary(bin, g);
  const auto t = read_grid_text(txt);
  const auto b = read_grid_binary(bin);
  for (const auto* r : {&t, &b}) {
    CHECK(r->kind == g.kind);
    CHECK(r->axis_a == g.axis_a);
    CHECK(r->axis_b == g.axis_b);
    CHECK(r->values == g.values);
  }
  CHECK(t.label == g.label);
  CHECK(t.metadata.at("T_ps") == "8");
  CHECK(fs::file_size(bin) == 64 + 8 * (3 + 4 + 2 * 12));

  std::ifstream in(bin, std::ios::binary);
  char magic[8];
  in.read(magic, 8);
  CHECK(std::string(magic, 8) == "P2DGRID1");
  CHECK_THROWS(read_grid_binary(txt));
}

TEST_CASE("heatmap colours and guides") {
  auto g = small_grid();
  const PolaritonFrequencies pf{1960.0, 1995.0, 4.0, 4.0};

  auto zero = g;
  for (auto& v : zero.values) v = cplx{};
  const auto zimg = render_heatmap(zero, {});
  for (int y = 0; y < zimg.height; ++y) {
    for (int x = 0; x < zimg.width; ++x) CHECK(zimg.pixel(x, y) == std::array<std::uint8_t, 3>{255, 255, 255});
  }
  const auto guides = polariton_guides(zero, pf);
  CHECK(!guides.along_b.empty());
  const auto gimg = render_heatmap(zero, guides);
  bool coloured = false;
  for (std::size_t i = 0; i < gimg.rgb.size(); ++i) coloured = coloured || gimg.rgb[i] != 255;
  CHECK(coloured);

  auto flipped = g;
  for (auto& v : flipped.values) v = -v;
  const auto img = render_heatmap(g, {});
  const auto inv = render_heatmap(flipped, {});
  REQUIRE(img.rgb.size() == inv.rgb.size());
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const auto p = img.pixel(x, y), q = inv.pixel(x, y);
      // red <-> blue swap of the diverging map
      CHECK(p[0] == q[2]);
      CHECK(p[2] == q[0]);
      CHECK(p[1] == q[1]);
    }
  }

  SpectrumGrid twoqc = g;
  twoqc.kind = SpectrumKind::twoqc;
  CHECK(polariton_guides(twoqc, pf).along_a.size() >= 3);

  const auto ppm = scratch("map.ppm").string();
  write_ppm(ppm, img);
  std::ifstream in(ppm, std::ios::binary);
  std::string head;
  in >> head;
  CHECK(head == "P6");

  SpectrumGrid one;
  one.axis_a = {1.0, 2.0};
  one.values = {1.0, 2.0};
  CHECK_THROWS_AS(render_heatmap(one, {}), std::invalid_argument);
}
