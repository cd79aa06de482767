#include "polariton2d/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace polariton2d {

namespace {

constexpr std::array<std::uint8_t, 3> kGreen{0, 160, 0};
constexpr std::array<std::uint8_t, 3> kPurple{128, 0, 128};

std::array<std::uint8_t, 3> diverging(double x) {
  x = std::clamp(x, -1.0, 1.0);
  auto c = [](double v) { return static_cast<std::uint8_t>(std::lround(255.0 * v)); };
  if (x >= 0.0) return {255, c(1.0 - x), c(1.0 - x)};
  return {c(1.0 + x), c(1.0 + x), 255};
}

// index of the sample closest to `value`, or -1 when outside the axis
int nearest(const std::vector<double>& axis, double value) {
  if (axis.empty() || value < axis.front() || value > axis.back()) return -1;
  const auto it = std::lower_bound(axis.begin(), axis.end(), value);
  auto i = static_cast<int>(it - axis.begin());
  if (i > 0 && (i == static_cast<int>(axis.size()) || value - axis[i - 1] < axis[i] - value)) --i;
  return i;
}

}  // namespace

std::array<std::uint8_t, 3> Image::pixel(int x, int y) const {
  const auto i = 3 * (static_cast<std::size_t>(y) * width + x);
  return {rgb[i], rgb[i + 1], rgb[i + 2]};
}

GuideLines polariton_guides(const SpectrumGrid& grid, const PolaritonFrequencies& pf) {
  GuideLines g;
  g.along_b = {{pf.omega_lp, kGreen}, {pf.omega_up, kGreen}};
  if (grid.kind == SpectrumKind::twoqc) {
    g.along_a = {{2.0 * pf.omega_lp, kPurple}, {pf.omega_lp + pf.omega_up, kPurple}, {2.0 * pf.omega_up, kPurple}};
  } else {
    g.along_a = {{pf.omega_lp, kGreen}, {pf.omega_up, kGreen}};
  }
  return g;
}

Image render_heatmap(const SpectrumGrid& grid, const GuideLines& guides, double scale) {
  if (!grid.is_2d()) throw std::invalid_argument("render_heatmap: grid is one-dimensional");
  if (scale <= 0.0) scale = grid.max_abs_real();
  Image img;
  img.width = static_cast<int>(grid.axis_b.size());
  img.height = static_cast<int>(grid.axis_a.size());
  img.rgb.resize(3 * static_cast<std::size_t>(img.width) * img.height);
  auto set = [&img](int x, int y, std::array<std::uint8_t, 3> c) {
    const auto i = 3 * (static_cast<std::size_t>(y) * img.width + x);
    img.rgb[i] = c[0];
    img.rgb[i + 1] = c[1];
    img.rgb[i + 2] = c[2];
  };
  for (int y = 0; y < img.height; ++y) {
    const auto a = static_cast<std::size_t>(img.height - 1 - y);
    for (int x = 0; x < img.width; ++x) {
      const double v = scale > 0.0 ? grid.at(a, static_cast<std::size_t>(x)).real() / scale : 0.0;
      set(x, y, diverging(v));
    }
  }
  for (const auto& line : guides.along_b) {
    const int x = nearest(grid.axis_b, line.position);
    if (x < 0) continue;
    for (int y = 0; y < img.height; ++y) set(x, y, line.color);
  }
  for (const auto& line : guides.along_a) {
    const int a = nearest(grid.axis_a, line.position);
    if (a < 0) continue;
    const int y = img.height - 1 - a;
    for (int x = 0; x < img.width; ++x) set(x, y, line.color);
  }
  return img;
}

void write_ppm(const std::string& path, const Image& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void emit_heatmap(const SpectrumGrid& grid, const PolaritonFrequencies& pf, const std::string& path) {
  write_ppm(path, render_heatmap(grid, polariton_guides(grid, pf)));
}

}  // namespace polariton2d
