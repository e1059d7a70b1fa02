#pragma once

#include <cstdint>
#include <random>

namespace shiner {

/// A private, reproducible source of standard-normal variates.
///
/// Each stream is a 64-bit Mersenne Twister keyed by (seed, stream id)
/// through std::seed_seq, whose output is fixed by the standard, so a
/// given key yields the same sequence on every conforming toolchain.
/// Normals come from the Box-Muller transform; the sine branch of each
/// pair is cached and handed out on the next call.
class NormalStream {
 public:
  /// Reserved id for the placement stream; node ids never reach it.
  static constexpr std::uint64_t kInitStreamId = ~std::uint64_t{0};

  NormalStream() : NormalStream(0, 0) {}
  NormalStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Uniform on the half-open interval (0, 1].
  double uniform_open0();
  /// Uniform on [0, 1).
  double uniform();
  double normal();

  bool operator==(const NormalStream&) const = default;

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace shiner
