#pragma once

#include <cstdint>
#include <string>

#include "polariton2d/spectra.hpp"

namespace polariton2d {

/// 2D text: '#'-prefixed "key = value" metadata lines (kind, label, then the
/// metadata map) followed by "omega_a omega_b re im" rows.
void write_grid_text(const std::string& path, const SpectrumGrid& grid);
SpectrumGrid read_grid_text(const std::string& path);

/// Raw binary: 64-byte header (magic "P2DGRID1", u32 version, u32 dtype tag,
/// u64 rows, u64 cols, u32 kind, zero padding), then axis_a, axis_b and the
/// row-major (re, im) pairs, all little-endian float64.
void write_grid_binary(const std::string& path, const SpectrumGrid& grid);
SpectrumGrid read_grid_binary(const std::string& path);

/// 1D CSV with header omega_cm1,dT_real,dT_imag.
void write_spectrum_csv(const std::string& path, const SpectrumGrid& grid);

inline constexpr std::uint32_t kBinaryDtypeComplex128 = 1;

}  // namespace polariton2d
