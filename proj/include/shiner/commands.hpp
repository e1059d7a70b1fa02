#pragma once

#include <iosfwd>

namespace shiner::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kIoError = 3,
  kGridError = 4,
  kBadRenderRequest = 5,
};

/// Entry point for the `shiner` executable: simulate, density, metrics,
/// render. Normal output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shiner::cli
