#include "shiner/types.hpp"

#include <cmath>

namespace shiner {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kNone: return "none";
    case Mode::kEnv: return "env";
    case Mode::kSocial: return "social";
    case Mode::kBoth: return "both";
  }
  return "both";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "none") return Mode::kNone;
  if (text == "env") return Mode::kEnv;
  if (text == "social") return Mode::kSocial;
  if (text == "both") return Mode::kBoth;
  return std::nullopt;
}

Mode SwarmParams::mode() const {
  if (env_enabled) return social_enabled ? Mode::kBoth : Mode::kEnv;
  return social_enabled ? Mode::kSocial : Mode::kNone;
}

void SwarmParams::set_mode(Mode mode) {
  env_enabled = mode == Mode::kEnv || mode == Mode::kBoth;
  social_enabled = mode == Mode::kSocial || mode == Mode::kBoth;
}

void SwarmParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (n_nodes < 1) throw ParamError("n_nodes must be at least 1");
  if (!finite(c1) || c1 <= 0.0) throw ParamError("c1 must be a positive constant");
  if (!finite(c2) || c2 <= 0.0) throw ParamError("c2 must be a positive constant");
  if (!finite(r) || r < 0.0) throw ParamError("r must be finite and non-negative");
  if (!finite(w) || w < 0.0) throw ParamError("w must be finite and non-negative");
  if (!finite(s) || s < 0.0) throw ParamError("s must be finite and non-negative");
  if (!finite(rho.real()) || !finite(rho.imag())) throw ParamError("rho_x and rho_y must be finite");
  if (sigma_const && (!finite(*sigma_const) || *sigma_const < 0.0)) {
    throw ParamError("sigma_const must be finite and non-negative");
  }
}

}  // namespace shiner
