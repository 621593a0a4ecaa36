#pragma once

#include <cstdint>
#include <random>

namespace starideal {

/// Seeded generator with a fixed range reduction, so sampled scopes are
/// identical across standard libraries (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi] by rejection sampling.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do draw = engine_();
    while (draw >= limit);
    return lo + static_cast<long>(draw % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Independent child stream for sample number `index`.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 mixer(seq);
    return Rng(mixer());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace starideal
