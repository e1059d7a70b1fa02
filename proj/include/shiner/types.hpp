#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shiner {

/// Location of an agent in the plane; real part is x, imaginary part is y.
using Position = std::complex<double>;

/// Raised when a parameter set violates the model's invariants.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which of the two movement factors are active.
enum class Mode { kNone, kEnv, kSocial, kBoth };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Axis-aligned rectangle, used for the initial placement region.
struct Box {
  double min_x = -0.5;
  double min_y = -0.5;
  double max_x = 0.5;
  double max_y = 0.5;

  bool operator==(const Box&) const = default;
};

/// Model constants shared by every node.
///
/// Speed follows c1 * (c2 + |p - rho|) when the environmental factor is on,
/// otherwise the constant `sigma_const`. When `sigma_const` is unset and the
/// environmental factor is off, the engine resolves it from the initial
/// placement (see `resolve_sigma_const`).
struct SwarmParams {
  std::size_t n_nodes = 100;
  double c1 = 0.1;
  double c2 = 0.1;
  double r = 0.2;
  double w = 20.0;
  double s = 0.08;
  Position rho{0.0, 0.0};
  bool env_enabled = true;
  bool social_enabled = true;
  std::optional<double> sigma_const;

  Mode mode() const;
  void set_mode(Mode mode);

  /// Throws ParamError naming the first violated constraint.
  void validate() const;

  bool operator==(const SwarmParams&) const = default;
};

}  // namespace shiner
