#pragma once

#include <cstdint>
#include <vector>

#include "zps/limits.hpp"
#include "zps/matrix.hpp"

namespace zps {

enum class LinearFlag { unknown, yes, no };

// A set of m x n matrices over Z_{p^s} ("words") carrying a design distance d.
// Words are stored sorted by row-major lexicographic order with no
// duplicates, so equal codes compare equal and files are byte-stable.
struct RankCode {
  RingSpec ring;
  std::uint32_t m = 0, n = 0, d = 0;
  std::vector<MatZ> words;
  LinearFlag linear = LinearFlag::unknown;
};

// Validates shapes and parameters (2 <= d <= m <= n), sorts, and rejects
// duplicates.
RankCode make_rank_code(const RingSpec& ring, std::uint32_t m, std::uint32_t n, std::uint32_t d,
                        std::vector<MatZ> words, LinearFlag linear = LinearFlag::unknown);

bool code_contains(const RankCode& code, const MatZ& word);

// Minimum rank distance over distinct pairs. Uses the linear shortcut
// (minimum inner rank over nonzero words) only when linearity has been
// verified; otherwise scans pairs under the pair guard.
std::uint32_t min_rank_distance(const RankCode& code, const Limits& limits = {});

struct MrdReport {
  bool is_mrd = false;
  bool cardinality_ok = false;
  bool distance_ok = false;
  std::uint64_t cardinality = 0;
  std::uint64_t expected_cardinality = 0;
  std::uint32_t min_distance = 0;
};

// Maximum-rank-distance test: cardinality p^{s n (m-d+1)} and minimum
// distance exactly d. Never assumes linearity.
MrdReport verify_mrd(const RankCode& code, const Limits& limits = {});

// Exact submodule test by span closure; records the verdict on the code.
bool is_linear_code(RankCode& code);

struct MdsReport {
  std::uint32_t min_row_distance = 0;  // Hamming distance on rows as symbols
  bool log_exact = false;
  std::uint64_t log_value = 0;  // log_{p^{sn}} |C| when exact
  bool is_mds = false;          // Singleton bound met with equality
};

// Rows as symbols over the alphabet Z_{p^s}^n: the code is MDS iff
// min_row_distance = m - log_{p^{sn}} |C| + 1 with the log an exact integer.
MdsReport hamming_mds_check(const RankCode& code, const Limits& limits = {});

// p-adic lift of a verified MRD base code over Z_p up to Z_{p^s}:
// A_1 = base, A_j = { B + p C : B in A_1, C in A_{j-1} }. Preserves
// cardinality products and minimum distance d.
RankCode lift_mrd(const RankCode& base, std::uint32_t s, const Limits& limits = {});

}  // namespace zps
