#pragma once

#include <cstdint>
#include <random>

namespace zps {

// Deterministic RNG for reproducible sampling. Bounded draws use rejection
// instead of std::uniform_int_distribution, whose output is not pinned down
// by the standard across library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    for (;;) {
      std::uint64_t v = engine_();
      if (v < limit) return v % bound;
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace zps
