#include "polariton2d/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace polariton2d {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view key, std::string_view text) {
  const auto s = trim(text);
  double value = 0.0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  if (!s.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(s) + "'");
  }
  if (!std::isfinite(value)) throw ConfigError(std::string(key), "value must be finite");
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  const auto s = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(std::string(key), "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  std::string s(trim(text));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(std::string(key), "expected a boolean, got '" + s + "'");
}

std::string format_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view key, std::string_view text, const std::array<Enum, N>& options) {
  const auto s = trim(text);
  for (const auto option : options) {
    if (to_string(option) == s) return option;
  }
  std::string allowed;
  for (const auto option : options) {
    if (!allowed.empty()) allowed += ", ";
    allowed += to_string(option);
  }
  throw ConfigError(std::string(key), "unknown value '" + std::string(s) + "' (allowed: " + allowed + ")");
}

constexpr std::array kScanKinds{ScanKind::linear,   ScanKind::pump_probe,      ScanKind::scan_1q,
                                ScanKind::scan_2qc, ScanKind::oracle_validate, ScanKind::stationary};
constexpr std::array kApodizations{Apodization::none, Apodization::half_hann};
constexpr std::array kConventions{DelayConvention::angular, DelayConvention::ordinary};

struct Field {
  std::string key;
  std::function<std::string(const Config&)> get;
  std::function<void(Config&, std::string_view key, std::string_view)> set;
};

template <typename Member>
Field double_field(std::string key, Member member) {
  return {std::move(key), [member](const Config& c) { return format_double(member(const_cast<Config&>(c))); },
          [member](Config& c, std::string_view k, std::string_view v) { member(c) = parse_double(k, v); }};
}

template <typename Member>
Field int_field(std::string key, Member member) {
  return {std::move(key), [member](const Config& c) { return std::to_string(member(const_cast<Config&>(c))); },
          [member](Config& c, std::string_view k, std::string_view v) { member(c) = parse_int(k, v); }};
}

template <typename Member>
Field bool_field(std::string key, Member member) {
  return {std::move(key),
          [member](const Config& c) { return std::string(member(const_cast<Config&>(c)) ? "true" : "false"); },
          [member](Config& c, std::string_view k, std::string_view v) { member(c) = parse_bool(k, v); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back(double_field("system.omega_c", [](Config& c) -> double& { return c.system.omega_c; }));
    f.push_back(double_field("system.kappa", [](Config& c) -> double& { return c.system.kappa; }));
    f.push_back(double_field("system.omega_e", [](Config& c) -> double& { return c.system.omega_e; }));
    f.push_back(double_field("system.omega_fe", [](Config& c) -> double& { return c.system.omega_fe; }));
    f.push_back(double_field("system.g_collective", [](Config& c) -> double& { return c.system.g_collective; }));
    f.push_back(double_field("system.delta_el", [](Config& c) -> double& { return c.system.delta_el; }));
    f.push_back(double_field("system.gamma_ge", [](Config& c) -> double& { return c.system.gamma_ge; }));
    f.push_back(double_field("system.gamma_ef", [](Config& c) -> double& { return c.system.gamma_ef; }));
    f.push_back(double_field("system.beta_eid", [](Config& c) -> double& { return c.system.beta_eid; }));
    f.push_back(double_field("system.conc_scale", [](Config& c) -> double& { return c.system.conc_scale; }));
    f.push_back(double_field("system.kappa_scale", [](Config& c) -> double& { return c.system.kappa_scale; }));

    for (int j = 0; j < 3; ++j) {
      const auto n = std::to_string(j + 1);
      f.push_back(double_field("pulses.eta_" + n, [j](Config& c) -> double& { return c.pulses.eta[j]; }));
    }
    f.push_back(double_field("pulses.tau_w", [](Config& c) -> double& { return c.pulses.tau_w; }));
    for (int j = 0; j < 3; ++j) {
      const auto n = std::to_string(j + 1);
      f.push_back(double_field("pulses.t_" + n, [j](Config& c) -> double& { return c.pulses.t[j]; }));
    }
    f.push_back(double_field("pulses.omega_l", [](Config& c) -> double& { return c.pulses.omega_l; }));
    for (int j = 0; j < 3; ++j) {
      const auto n = std::to_string(j + 1);
      f.push_back(double_field("pulses.phi_" + n, [j](Config& c) -> double& { return c.pulses.phi[j]; }));
    }

    f.push_back({"scan.scan_kind", [](const Config& c) { return std::string(to_string(c.scan.kind)); },
                 [](Config& c, std::string_view k, std::string_view v) { c.scan.kind = parse_enum(k, v, kScanKinds); }});
    f.push_back({"scan.tau_list", [](const Config& c) { return format_list(c.scan.tau_list); },
                 [](Config& c, std::string_view k, std::string_view v) {
                   try {
                     c.scan.tau_list = parse_grid(v);
                   } catch (const ConfigError& e) {
                     throw ConfigError(std::string(k), e.what());
                   }
                 }});
    f.push_back({"scan.T_list", [](const Config& c) { return format_list(c.scan.T_list); },
                 [](Config& c, std::string_view k, std::string_view v) {
                   try {
                     c.scan.T_list = parse_grid(v);
                   } catch (const ConfigError& e) {
                     throw ConfigError(std::string(k), e.what());
                   }
                 }});
    f.push_back(double_field("scan.window_ps", [](Config& c) -> double& { return c.scan.window_ps; }));
    f.push_back(double_field("scan.dt", [](Config& c) -> double& { return c.scan.dt; }));
    f.push_back(int_field("scan.record_stride", [](Config& c) -> int& { return c.scan.record_stride; }));
    f.push_back({"scan.apodization", [](const Config& c) { return std::string(to_string(c.scan.apodization)); },
                 [](Config& c, std::string_view k, std::string_view v) {
                   c.scan.apodization = parse_enum(k, v, kApodizations);
                 }});
    f.push_back(int_field("scan.pad_factor", [](Config& c) -> int& { return c.scan.pad_factor; }));
    f.push_back(double_field("scan.mask_eps", [](Config& c) -> double& { return c.scan.mask_eps; }));
    f.push_back(double_field("scan.omega_window", [](Config& c) -> double& { return c.scan.omega_window; }));
    f.push_back({"scan.out_dir", [](const Config& c) { return c.scan.out_dir; },
                 [](Config& c, std::string_view, std::string_view v) { c.scan.out_dir = std::string(trim(v)); }});
    f.push_back(bool_field("scan.gsb_se", [](Config& c) -> bool& { return c.scan.mask.gsb_se; }));
    f.push_back(bool_field("scan.esa", [](Config& c) -> bool& { return c.scan.mask.esa; }));
    f.push_back(bool_field("scan.dqc_feed", [](Config& c) -> bool& { return c.scan.mask.dqc_feed; }));
    f.push_back(bool_field("scan.eid", [](Config& c) -> bool& { return c.scan.mask.eid; }));
    f.push_back(bool_field("scan.eid_in_2qc", [](Config& c) -> bool& { return c.scan.mask.eid_in_2qc; }));
    f.push_back(bool_field("scan.disable_ef_coupling",
                           [](Config& c) -> bool& { return c.scan.mask.disable_ef_coupling; }));
    f.push_back(int_field("scan.n_phi", [](Config& c) -> int& { return c.scan.n_phi; }));
    f.push_back(double_field("scan.oracle_eta", [](Config& c) -> double& { return c.scan.oracle_eta; }));
    f.push_back(double_field("scan.stationary_rho_ee", [](Config& c) -> double& { return c.scan.stationary_rho_ee; }));
    f.push_back({"scan.delay_convention", [](const Config& c) { return std::string(to_string(c.scan.delay_convention)); },
                 [](Config& c, std::string_view k, std::string_view v) {
                   c.scan.delay_convention = parse_enum(k, v, kConventions);
                 }});
    f.push_back(bool_field("scan.binary_output", [](Config& c) -> bool& { return c.scan.binary_output; }));
    return f;
  }();
  return table;
}

const Field* find_field(std::string_view key) {
  for (const auto& f : fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

void require(bool ok, const char* key, const char* message) {
  if (!ok) throw ConfigError(key, message);
}

}  // namespace

std::string_view to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::linear: return "linear";
    case ScanKind::pump_probe: return "pump_probe";
    case ScanKind::scan_1q: return "scan_1q";
    case ScanKind::scan_2qc: return "scan_2qc";
    case ScanKind::oracle_validate: return "oracle_validate";
    case ScanKind::stationary: return "stationary";
  }
  return "?";
}

std::string_view to_string(Apodization apodization) {
  return apodization == Apodization::none ? "none" : "half_hann";
}

std::string_view to_string(DelayConvention convention) {
  return convention == DelayConvention::angular ? "angular" : "ordinary";
}

double SystemParams::drive_scale() const { return std::sqrt(1.0 / kappa_scale); }

void SystemParams::validate() const {
  const std::array values{omega_c, kappa,    omega_e,  omega_fe,   g_collective, delta_el,
                          gamma_ge, gamma_ef, beta_eid, conc_scale, kappa_scale};
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("system", "all parameters must be finite");
  }
  require(kappa > 0.0, "system.kappa", "must be > 0");
  require(gamma_ge >= 0.0, "system.gamma_ge", "must be >= 0");
  require(gamma_ef >= 0.0, "system.gamma_ef", "must be >= 0");
  require(g_collective >= 0.0, "system.g_collective", "must be >= 0");
  require(conc_scale > 0.0, "system.conc_scale", "must be > 0");
  require(kappa_scale > 0.0, "system.kappa_scale", "must be > 0");
}

PulseTrain PulseTrain::with_delays(double tau, double T) const {
  PulseTrain out = *this;
  out.t = {0.0, tau, tau + T};
  return out;
}

std::array<double, 3> PulseTrain::effective_eta(const SystemParams& params) const {
  const double s = params.drive_scale();
  return {eta[0] * s, eta[1] * s, eta[2] * s};
}

void PulseTrain::validate() const {
  for (double v : eta) require(std::isfinite(v), "pulses.eta", "must be finite");
  for (double v : t) require(std::isfinite(v), "pulses.t", "must be finite");
  for (double v : phi) require(std::isfinite(v), "pulses.phi", "must be finite");
  require(std::isfinite(omega_l), "pulses.omega_l", "must be finite");
  require(tau_w > 0.0 && std::isfinite(tau_w), "pulses.tau_w", "must be > 0");
}

void ScanSpec::validate() const {
  auto check_grid = [](const std::vector<double>& grid, const char* key) {
    require(!grid.empty(), key, "grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      require(std::isfinite(grid[i]), key, "grid values must be finite");
      if (i > 0) require(grid[i] > grid[i - 1], key, "grid must be strictly increasing");
    }
  };
  check_grid(tau_list, "scan.tau_list");
  check_grid(T_list, "scan.T_list");
  require(window_ps > 0.0, "scan.window_ps", "must be > 0");
  require(dt > 0.0 && std::isfinite(dt), "scan.dt", "must be > 0");
  require(record_stride >= 1, "scan.record_stride", "must be >= 1");
  require(pad_factor >= 1, "scan.pad_factor", "must be >= 1");
  require(mask_eps > 0.0 && mask_eps < 1.0, "scan.mask_eps", "must lie in (0, 1)");
  require(omega_window > 0.0, "scan.omega_window", "must be > 0");
  require(n_phi >= 1, "scan.n_phi", "must be >= 1");
  require(oracle_eta > 0.0, "scan.oracle_eta", "must be > 0");
  require(std::isfinite(stationary_rho_ee), "scan.stationary_rho_ee", "must be finite");
  require(!out_dir.empty(), "scan.out_dir", "must not be empty");
}

std::vector<double> parse_grid(std::string_view text) {
  const auto s = trim(text);
  std::vector<double> out;
  if (s.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (true) {
      const auto next = s.find(':', pos);
      parts.push_back(parse_double("grid", s.substr(pos, next - pos)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) throw ConfigError("", "range must have the form start:step:stop");
    const double start = parts[0], step = parts[1], stop = parts[2];
    if (!(step > 0.0)) throw ConfigError("", "range step must be > 0");
    if (stop < start) throw ConfigError("", "range stop must be >= start");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find(',', pos);
    const auto item = trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (!item.empty()) out.push_back(parse_double("grid", item));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

void set_value(Config& config, std::string_view key, std::string_view value) {
  if (key == "system.delta_mech") {
    config.system.omega_fe = config.system.omega_e + parse_double(key, value);
    return;
  }
  const Field* field = find_field(key);
  if (!field) throw ConfigError(std::string(key), "unknown key");
  field->set(config, key, value);
}

void apply_override(Config& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(std::string(trim(assignment)), "override must have the form section.key=value");
  }
  set_value(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

Config load_config(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("", std::string("malformed document: ") + e.what());
  }

  Config config;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError(section, "key outside of a section");
    if (section != "system" && section != "pulses" && section != "scan") {
      throw ConfigError(section, "unknown section");
    }
    for (const auto& [key, value] : body) {
      set_value(config, section + "." + key, value.get_value<std::string>());
    }
  }
  config.validate();
  return config;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

std::string serialize(const Config& config) {
  std::string out;
  std::string current;
  for (const auto& f : fields()) {
    const auto dot = f.key.find('.');
    const auto section = f.key.substr(0, dot);
    if (section != current) {
      if (!current.empty()) out += "\n";
      out += "[" + section + "]\n";
      current = section;
    }
    out += f.key.substr(dot + 1) + " = " + f.get(config) + "\n";
  }
  return out;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& f : fields()) keys.push_back(f.key);
  return keys;
}

}  // namespace polariton2d
