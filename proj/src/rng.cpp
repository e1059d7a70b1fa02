#include "shiner/rng.hpp"

#include <cmath>
#include <numbers>

namespace shiner {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32),
                    0x5eedu};
  return std::mt19937_64(seq);
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

}  // namespace

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream_id)
    : engine_(make_engine(seed, stream_id)) {}

double NormalStream::uniform_open0() {
  return static_cast<double>((engine_() >> 11) + 1) * kTwoPow53Inv;
}

double NormalStream::uniform() {
  return static_cast<double>(engine_() >> 11) * kTwoPow53Inv;
}

double NormalStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open0()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

}  // namespace shiner
