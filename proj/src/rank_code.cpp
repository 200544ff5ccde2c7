#include "zps/rank_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

namespace zps {

namespace {

std::uint32_t effective_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("ZPS_RANK_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) hw = std::min<unsigned long>(hw, v);
  }
  return hw;
}

std::uint64_t expected_mrd_cardinality(const RankCode& code) {
  const std::uint32_t exp = code.ring.s * code.n * (code.m - code.d + 1);
  return checked_pow(code.ring.p, exp, std::uint64_t(1) << 62);
}

struct WordLess {
  bool operator()(const MatZ& a, const MatZ& b) const { return lex_less(a, b); }
};

}  // namespace

RankCode make_rank_code(const RingSpec& ring, std::uint32_t m, std::uint32_t n, std::uint32_t d,
                        std::vector<MatZ> words, LinearFlag linear) {
  if (!(2 <= d && d <= m && m <= n))
    fail(errc::bad_parameters, "rank code requires 2 <= d <= m <= n");
  for (const MatZ& w : words) {
    if (w.ring() != ring) fail(errc::ring_mismatch, "word over a different ring");
    if (w.rows() != m || w.cols() != n) fail(errc::dimension_mismatch, "word with wrong shape");
  }
  std::sort(words.begin(), words.end(), WordLess{});
  auto dup = std::adjacent_find(words.begin(), words.end());
  if (dup != words.end()) fail(errc::duplicate_word, "duplicate word in code");
  return RankCode{ring, m, n, d, std::move(words), linear};
}

bool code_contains(const RankCode& code, const MatZ& word) {
  return std::binary_search(code.words.begin(), code.words.end(), word, WordLess{});
}

std::uint32_t min_rank_distance(const RankCode& code, const Limits& limits) {
  const std::uint64_t count = code.words.size();
  if (count < 2) fail(errc::too_few_words, "minimum distance needs at least two words");

  if (code.linear == LinearFlag::yes) {
    // For a submodule, pairwise differences are exactly the nonzero words.
    std::uint32_t best = code.m + 1;
    for (const MatZ& w : code.words) {
      if (w.is_zero()) continue;
      best = std::min(best, inner_rank(w));
    }
    return best;
  }

  const std::uint64_t pairs = count * (count - 1) / 2;
  if (pairs > limits.max_pair_checks)
    fail(errc::too_large, std::to_string(pairs) + " pairs exceed the pair guard");

  const std::uint32_t threads = std::min<std::uint64_t>(effective_threads(), count);
  std::vector<std::uint32_t> best_per(threads, code.m + 1);
  auto worker = [&](std::uint32_t t) {
    std::uint32_t best = code.m + 1;
    for (std::uint64_t i = t; i < count; i += threads) {
      for (std::uint64_t j = i + 1; j < count; ++j) {
        best = std::min(best, rank_distance(code.words[i], code.words[j]));
        if (best == 1) break;
      }
      if (best == 1) break;
    }
    best_per[t] = best;
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best_per.begin(), best_per.end());
}

MrdReport verify_mrd(const RankCode& code, const Limits& limits) {
  MrdReport rep;
  rep.cardinality = code.words.size();
  rep.expected_cardinality = expected_mrd_cardinality(code);
  rep.cardinality_ok = rep.cardinality == rep.expected_cardinality;
  if (code.words.size() >= 2) {
    // The cached linear flag is only a shortcut; never assume it here.
    RankCode honest = code;
    if (honest.linear == LinearFlag::yes) honest.linear = LinearFlag::unknown;
    rep.min_distance = min_rank_distance(honest, limits);
    rep.distance_ok = rep.min_distance == code.d;
  }
  rep.is_mrd = rep.cardinality_ok && rep.distance_ok;
  return rep;
}

bool is_linear_code(RankCode& code) {
  std::set<MatZ, WordLess> members(code.words.begin(), code.words.end());
  const MatZ zero(code.ring, code.m, code.n);
  if (!members.count(zero)) {
    code.linear = LinearFlag::no;
    return false;
  }
  // Build the submodule generated by the words with greedy generators:
  // span + <w> = { v + c w }, which stays a submodule inductively. Every
  // element is membership-checked on insertion, so the scan detects the
  // first escape instead of materializing a larger span.
  std::set<MatZ, WordLess> span;
  span.insert(zero);
  for (const MatZ& w : code.words) {
    if (span.count(w)) continue;
    std::vector<MatZ> snapshot(span.begin(), span.end());
    MatZ cw(code.ring, code.m, code.n);
    for (std::uint64_t c = 1; c < code.ring.modulus; ++c) {
      cw = add(cw, w);
      for (const MatZ& v : snapshot) {
        MatZ t = add(v, cw);
        if (!members.count(t)) {
          code.linear = LinearFlag::no;
          return false;
        }
        span.insert(std::move(t));
      }
    }
  }
  // The span now contains every word and never escaped the set.
  code.linear = LinearFlag::yes;
  return true;
}

MdsReport hamming_mds_check(const RankCode& code, const Limits& limits) {
  MdsReport rep;
  const std::uint64_t count = code.words.size();
  if (count < 2) fail(errc::too_few_words, "Hamming distance needs at least two words");

  auto row_distance = [&](const MatZ& a, const MatZ& b) {
    std::uint32_t dist = 0;
    for (std::uint32_t i = 0; i < code.m; ++i) {
      for (std::uint32_t j = 0; j < code.n; ++j) {
        if (a(i, j) != b(i, j)) {
          ++dist;
          break;
        }
      }
    }
    return dist;
  };

  std::uint32_t best = code.m + 1;
  if (code.linear == LinearFlag::yes) {
    const MatZ zero(code.ring, code.m, code.n);
    for (const MatZ& w : code.words) {
      if (w.is_zero()) continue;
      best = std::min(best, row_distance(w, zero));
    }
  } else {
    const std::uint64_t pairs = count * (count - 1) / 2;
    if (pairs > limits.max_pair_checks)
      fail(errc::too_large, std::to_string(pairs) + " pairs exceed the pair guard");
    for (std::uint64_t i = 0; i < count; ++i)
      for (std::uint64_t j = i + 1; j < count; ++j)
        best = std::min(best, row_distance(code.words[i], code.words[j]));
  }
  rep.min_row_distance = best;

  // Exact integer log of |C| in base p^{sn}.
  const std::uint64_t base = checked_pow(code.ring.p, code.ring.s * code.n, std::uint64_t(1) << 62);
  std::uint64_t acc = 1, e = 0;
  while (acc < count) {
    if (acc > (std::uint64_t(1) << 62) / base) {
      acc = 0;  // next multiply would overflow, so the log cannot be exact
      break;
    }
    acc *= base;
    ++e;
  }
  rep.log_exact = acc == count;
  rep.log_value = rep.log_exact ? e : 0;
  rep.is_mds = rep.log_exact && best == code.m - e + 1;
  return rep;
}

RankCode lift_mrd(const RankCode& base, std::uint32_t s, const Limits& limits) {
  if (base.ring.s != 1) fail(errc::bad_parameters, "lift base must live over Z_p");
  if (s < 1) fail(errc::bad_parameters, "lift exponent must be at least 1");
  const MatZ zero(base.ring, base.m, base.n);
  if (!code_contains(base, zero)) fail(errc::missing_zero, "lift base must contain the zero word");
  MrdReport rep = verify_mrd(base, limits);
  if (!rep.is_mrd)
    fail(errc::base_not_mrd, "lift base is not maximum rank distance (cardinality " +
                                 std::to_string(rep.cardinality) + " vs " +
                                 std::to_string(rep.expected_cardinality) + ", min distance " +
                                 std::to_string(rep.min_distance) + ")");

  const std::uint32_t exp = s * base.n * (base.m - base.d + 1);
  std::uint64_t target = 0;
  try {
    target = checked_pow(base.ring.p, exp, std::uint64_t(1) << 62);
  } catch (const error&) {
    fail(errc::too_large, "lifted code size overflows the exact range");
  }
  if (target > limits.max_code_words)
    fail(errc::too_large, "lifted code would have " + std::to_string(target) + " words");

  RankCode current = base;
  for (std::uint32_t j = 2; j <= s; ++j) {
    const RingSpec rj = make_ring(base.ring.p, j);
    std::vector<MatZ> lifted_base;
    lifted_base.reserve(base.words.size());
    for (const MatZ& b : base.words) lifted_base.push_back(lift(b, rj));

    std::vector<MatZ> next;
    next.reserve(base.words.size() * current.words.size());
    for (const MatZ& b : lifted_base) {
      for (const MatZ& c : current.words) next.push_back(add(b, lift_times_p(c, rj)));
    }
    RankCode lifted = make_rank_code(rj, base.m, base.n, base.d, std::move(next));
    if (lifted.words.size() != base.words.size() * current.words.size())
      fail(errc::internal, "lift lost words to collisions");
    current = std::move(lifted);
  }
  current.linear = LinearFlag::unknown;
  return current;
}

}  // namespace zps
