#pragma once

#include <cstdint>

namespace zps {

// Desk-scale guards. Exhaustive routines refuse inputs past these bounds
// instead of silently churning; callers may raise them (never lower the
// semantics) via scaled(). The small-oracle bounds in inner_rank_oracle and
// the brute-force graph solvers are hard and not affected.
struct Limits {
  std::uint64_t max_code_words = std::uint64_t(1) << 20;
  std::uint64_t max_pair_checks = 10'000'000;
  std::uint64_t max_graph_vertices = std::uint64_t(1) << 16;

  Limits scaled(std::uint64_t factor) const {
    return Limits{max_code_words * factor, max_pair_checks * factor,
                  max_graph_vertices * factor};
  }
};

}  // namespace zps
