#pragma once

#include <cstdint>

#include "zps/limits.hpp"
#include "zps/rank_code.hpp"

namespace zps {

// Linear MRD code over Z_p from evaluations of linearized polynomials:
// codewords are the m x n matrices whose row i holds the coordinates of
// f(g_i) for f ranging over linearized polynomials with m - d + 1
// coefficients, where g_1, ..., g_m are the basis elements 1, x, ...,
// x^{m-1} of F_{p^n}. Requires 2 <= d <= m <= n and p^{n(m-d+1)} within the
// word guard.
RankCode gabidulin_code(std::uint64_t p, std::uint32_t m, std::uint32_t n, std::uint32_t d,
                        const Limits& limits = {});

}  // namespace zps
