#include "shiner/config.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace shiner {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string describe(std::size_t line) {
  return line == 0 ? std::string{} : " (line " + std::to_string(line) + ")";
}

double parse_double(std::string_view key, std::string_view value, std::size_t line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key), line, "expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value, std::size_t line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key), line,
                      "expected a non-negative integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ConfigError::ConfigError(std::string key, std::size_t line, const std::string& message)
    : std::runtime_error("config key '" + key + "'" + describe(line) + ": " + message),
      key_(std::move(key)),
      line_(line) {}

void RunConfig::validate() const {
  auto fail = [](const char* key, const char* message) { throw ConfigError(key, 0, message); };
  try {
    params.validate();
  } catch (const ParamError& e) {
    const std::string what = e.what();
    throw ConfigError(what.substr(0, what.find(' ')), 0, what);
  }
  if (stride < 1) fail("stride", "snapshot stride must be at least 1");
  if (!(region.min_x < region.max_x)) fail("region_min_x", "region must have positive width");
  if (!(region.min_y < region.max_y)) fail("region_min_y", "region must have positive height");
  if (!(eps >= 0.0)) fail("eps", "eps must be non-negative");
  if (out_dir.empty()) fail("out_dir", "output directory must not be empty");
}

void apply_config_value(RunConfig& config, std::string_view key, std::string_view value,
                        std::size_t line) {
  auto num = [&] { return parse_double(key, value, line); };
  auto count = [&] { return parse_unsigned(key, value, line); };
  auto& p = config.params;

  if (key == "n_nodes") p.n_nodes = count();
  else if (key == "steps") config.steps = count();
  else if (key == "stride") config.stride = count();
  else if (key == "seed") config.seed = count();
  else if (key == "c1") p.c1 = num();
  else if (key == "c2") p.c2 = num();
  else if (key == "r") p.r = num();
  else if (key == "w") p.w = num();
  else if (key == "s") p.s = num();
  else if (key == "rho_x") p.rho.real(num());
  else if (key == "rho_y") p.rho.imag(num());
  else if (key == "sigma_const") p.sigma_const = num();
  else if (key == "eps") config.eps = num();
  else if (key == "region_min_x") config.region.min_x = num();
  else if (key == "region_min_y") config.region.min_y = num();
  else if (key == "region_max_x") config.region.max_x = num();
  else if (key == "region_max_y") config.region.max_y = num();
  else if (key == "out_dir") config.out_dir = std::string(value);
  else if (key == "mode") {
    const auto mode = parse_mode(value);
    if (!mode) {
      throw ConfigError(std::string(key), line,
                        "expected none|env|social|both, got '" + std::string(value) + "'");
    }
    p.set_mode(*mode);
  } else {
    throw ConfigError(std::string(key), line, "unknown key");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::map<std::string, std::size_t, std::less<>> key_lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(line), line_no, "expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(std::string(key), line_no, "missing value");
    apply_config_value(config, key, value, line_no);
    key_lines[std::string(key)] = line_no;
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    const auto it = key_lines.find(e.key());
    if (it == key_lines.end()) throw;
    const std::string what = e.what();
    throw ConfigError(e.key(), it->second, what.substr(what.find(": ") + 2));
  }
  return config;
}

std::string emit_config(const RunConfig& config) {
  const auto& p = config.params;
  std::ostringstream out;
  out << "n_nodes = " << p.n_nodes << '\n'
      << "steps = " << config.steps << '\n'
      << "stride = " << config.stride << '\n'
      << "seed = " << config.seed << '\n'
      << "mode = " << mode_name(p.mode()) << '\n'
      << "c1 = " << exact(p.c1) << '\n'
      << "c2 = " << exact(p.c2) << '\n'
      << "r = " << exact(p.r) << '\n'
      << "w = " << exact(p.w) << '\n'
      << "s = " << exact(p.s) << '\n'
      << "rho_x = " << exact(p.rho.real()) << '\n'
      << "rho_y = " << exact(p.rho.imag()) << '\n';
  if (p.sigma_const) out << "sigma_const = " << exact(*p.sigma_const) << '\n';
  out << "eps = " << exact(config.eps) << '\n'
      << "region_min_x = " << exact(config.region.min_x) << '\n'
      << "region_min_y = " << exact(config.region.min_y) << '\n'
      << "region_max_x = " << exact(config.region.max_x) << '\n'
      << "region_max_y = " << exact(config.region.max_y) << '\n'
      << "out_dir = " << config.out_dir << '\n';
  return out.str();
}

}  // namespace shiner
