#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polariton2d/spectra.hpp"

namespace polariton2d {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  std::array<std::uint8_t, 3> pixel(int x, int y) const;
};

struct GuideLine {
  double position = 0.0;  // cm^-1
  std::array<std::uint8_t, 3> color{};
};

struct GuideLines {
  std::vector<GuideLine> along_a;  // horizontal lines at fixed axis_a value
  std::vector<GuideLine> along_b;  // vertical lines at fixed axis_b value
};

/// Single-polariton lines on both axes; double-polariton lines
/// (2 LP, LP + UP, 2 UP) on the excitation axis of a twoqc grid.
GuideLines polariton_guides(const SpectrumGrid& grid, const PolaritonFrequencies& pf);

/// Diverging blue-white-red map of Re(values) / scale (scale <= 0 picks
/// max |Re|), columns along axis_b, rows along axis_a with the largest value
/// at the top. Throws std::invalid_argument for 1D grids.
Image render_heatmap(const SpectrumGrid& grid, const GuideLines& guides, double scale = 0.0);

/// Binary PPM (P6).
void write_ppm(const std::string& path, const Image& image);

void emit_heatmap(const SpectrumGrid& grid, const PolaritonFrequencies& pf, const std::string& path);

}  // namespace polariton2d
