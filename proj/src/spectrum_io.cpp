#include "polariton2d/spectrum_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace polariton2d {

namespace {

constexpr char kMagic[8] = {'P', '2', 'D', 'G', 'R', 'I', 'D', '1'};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

template <typename T>
void put(std::string& buf, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  buf.append(bytes, sizeof(T));
}

template <typename T>
T get(const std::string& buf, std::size_t& pos) {
  if (pos + sizeof(T) > buf.size()) throw std::runtime_error("binary grid truncated");
  char bytes[sizeof(T)];
  std::memcpy(bytes, buf.data() + pos, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  pos += sizeof(T);
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

SpectrumKind kind_from_string(const std::string& s) {
  for (auto k : {SpectrumKind::linear, SpectrumKind::pump_probe_1d, SpectrumKind::oneq_nr, SpectrumKind::oneq_r,
                 SpectrumKind::oneq_sum, SpectrumKind::twoqc}) {
    if (to_string(k) == s) return k;
  }
  throw std::runtime_error("unknown spectrum kind '" + s + "'");
}

}  // namespace

void write_grid_text(const std::string& path, const SpectrumGrid& grid) {
  if (!grid.is_2d()) throw std::invalid_argument("write_grid_text: grid is one-dimensional");
  auto out = open_out(path);
  out << "# kind = " << to_string(grid.kind) << '\n';
  out << "# label = " << grid.label << '\n';
  out << "# rows = " << grid.axis_a.size() << '\n';
  out << "# cols = " << grid.axis_b.size() << '\n';
  for (const auto& [k, v] : grid.metadata) out << "# " << k << " = " << v << '\n';
  out << "# omega_a omega_b re im\n";
  std::string line;
  for (std::size_t a = 0; a < grid.axis_a.size(); ++a) {
    for (std::size_t b = 0; b < grid.axis_b.size(); ++b) {
      const auto v = grid.at(a, b);
      line = num(grid.axis_a[a]) + ' ' + num(grid.axis_b[b]) + ' ' + num(v.real()) + ' ' + num(v.imag()) + '\n';
      out << line;
    }
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

SpectrumGrid read_grid_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  SpectrumGrid grid;
  std::size_t rows = 0, cols = 0;
  std::string line;
  std::vector<double> a_vals, b_vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      const auto key = line.substr(2, eq - 2);
      const auto value = line.substr(eq + 3);
      if (key == "kind") grid.kind = kind_from_string(value);
      else if (key == "label") grid.label = value;
      else if (key == "rows") rows = std::stoul(value);
      else if (key == "cols") cols = std::stoul(value);
      else grid.metadata[key] = value;
      continue;
    }
    std::istringstream ss(line);
    double a, b, re, im;
    if (!(ss >> a >> b >> re >> im)) throw std::runtime_error("malformed row in '" + path + "'");
    a_vals.push_back(a);
    b_vals.push_back(b);
    grid.values.emplace_back(re, im);
  }
  if (rows * cols != grid.values.size() || cols == 0) throw std::runtime_error("row count mismatch in '" + path + "'");
  for (std::size_t r = 0; r < rows; ++r) grid.axis_a.push_back(a_vals[r * cols]);
  grid.axis_b.assign(b_vals.begin(), b_vals.begin() + static_cast<std::ptrdiff_t>(cols));
  return grid;
}

void write_grid_binary(const std::string& path, const SpectrumGrid& grid) {
  std::string buf;
  buf.append(kMagic, sizeof kMagic);
  put<std::uint32_t>(buf, 1);
  put<std::uint32_t>(buf, kBinaryDtypeComplex128);
  put<std::uint64_t>(buf, grid.axis_a.size());
  put<std::uint64_t>(buf, grid.axis_b.size());
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(grid.kind));
  buf.resize(64, '\0');
  for (double v : grid.axis_a) put(buf, v);
  for (double v : grid.axis_b) put(buf, v);
  for (const auto& v : grid.values) {
    put(buf, v.real());
    put(buf, v.imag());
  }
  auto out = open_out(path, std::ios::out | std::ios::binary);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

SpectrumGrid read_grid_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 64 || std::memcmp(buf.data(), kMagic, sizeof kMagic) != 0) {
    throw std::runtime_error("'" + path + "' is not a binary grid");
  }
  std::size_t pos = 8;
  get<std::uint32_t>(buf, pos);
  if (get<std::uint32_t>(buf, pos) != kBinaryDtypeComplex128) throw std::runtime_error("unsupported dtype");
  const auto rows = get<std::uint64_t>(buf, pos);
  const auto cols = get<std::uint64_t>(buf, pos);
  SpectrumGrid grid;
  grid.kind = static_cast<SpectrumKind>(get<std::uint32_t>(buf, pos));
  pos = 64;
  for (std::uint64_t i = 0; i < rows; ++i) grid.axis_a.push_back(get<double>(buf, pos));
  for (std::uint64_t i = 0; i < cols; ++i) grid.axis_b.push_back(get<double>(buf, pos));
  const std::uint64_t n = rows * std::max<std::uint64_t>(cols, 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double re = get<double>(buf, pos);
    const double im = get<double>(buf, pos);
    grid.values.emplace_back(re, im);
  }
  return grid;
}

void write_spectrum_csv(const std::string& path, const SpectrumGrid& grid) {
  if (grid.is_2d()) throw std::invalid_argument("write_spectrum_csv: grid is two-dimensional");
  auto out = open_out(path);
  out << "omega_cm1,dT_real,dT_imag\n";
  for (std::size_t i = 0; i < grid.axis_a.size(); ++i) {
    out << num(grid.axis_a[i]) << ',' << num(grid.values[i].real()) << ',' << num(grid.values[i].imag()) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace polariton2d
