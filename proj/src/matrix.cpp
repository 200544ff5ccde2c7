#include "zps/matrix.hpp"

#include <algorithm>
#include <cstring>

#include "zps/kernels.hpp"

namespace zps {

namespace {

void check_same_ring(const MatZ& a, const MatZ& b) {
  if (a.ring() != b.ring()) fail(errc::ring_mismatch, "matrices over different rings");
}

void check_same_shape(const MatZ& a, const MatZ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::dimension_mismatch, "matrix shapes differ");
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

MatZ::MatZ(const RingSpec& ring, std::uint32_t rows, std::uint32_t cols)
    : ring_(ring), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, 0) {
  if (rows == 0 || cols == 0) fail(errc::bad_parameters, "matrix dimensions must be positive");
}

MatZ MatZ::identity(const RingSpec& ring, std::uint32_t n) {
  MatZ a(ring, n, n);
  for (std::uint32_t i = 0; i < n; ++i) a.at(i, i) = 1 % ring.modulus;
  return a;
}

MatZ MatZ::from_rows(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(errc::bad_parameters, "matrix dimensions must be positive");
  MatZ a(ring, static_cast<std::uint32_t>(rows.size()), static_cast<std::uint32_t>(rows[0].size()));
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    if (rows[i].size() != rows[0].size()) fail(errc::dimension_mismatch, "ragged row lengths");
    for (std::uint32_t j = 0; j < a.cols(); ++j) a.at(i, j) = norm_mod(rows[i][j], ring);
  }
  return a;
}

bool MatZ::is_zero() const noexcept {
  for (std::uint64_t v : e_)
    if (v != 0) return false;
  return true;
}

bool lex_less(const MatZ& a, const MatZ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::pair(a.rows(), a.cols()) < std::pair(b.rows(), b.cols());
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

MatZ add(const MatZ& a, const MatZ& b) {
  check_same_ring(a, b);
  check_same_shape(a, b);
  MatZ out(a.ring(), a.rows(), a.cols());
  kernels::active().add_mod(a.data(), b.data(), out.data(), a.size(), a.ring().modulus);
  return out;
}

MatZ sub(const MatZ& a, const MatZ& b) {
  check_same_ring(a, b);
  check_same_shape(a, b);
  MatZ out(a.ring(), a.rows(), a.cols());
  kernels::active().sub_mod(a.data(), b.data(), out.data(), a.size(), a.ring().modulus);
  return out;
}

MatZ neg(const MatZ& a) {
  MatZ out(a.ring(), a.rows(), a.cols());
  kernels::active().neg_mod(a.data(), out.data(), a.size(), a.ring().modulus);
  return out;
}

MatZ mul(const MatZ& a, const MatZ& b) {
  check_same_ring(a, b);
  if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "inner dimensions differ");
  const std::uint64_t m = a.ring().modulus;
  MatZ out(a.ring(), a.rows(), b.cols());
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    for (std::uint32_t k = 0; k < a.cols(); ++k) {
      std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < b.cols(); ++j) {
        std::uint64_t t = kernels::mul_mod(aik, b(k, j), m);
        std::uint64_t& o = out.at(i, j);
        o = o + t >= m ? o + t - m : o + t;
      }
    }
  }
  return out;
}

MatZ scalar_mul(std::uint64_t c, const MatZ& a) {
  MatZ out(a.ring(), a.rows(), a.cols());
  kernels::scale_mod(a.data(), c % a.ring().modulus, out.data(), a.size(), a.ring().modulus);
  return out;
}

MatZ transpose(const MatZ& a) {
  MatZ out(a.ring(), a.cols(), a.rows());
  for (std::uint32_t i = 0; i < a.rows(); ++i)
    for (std::uint32_t j = 0; j < a.cols(); ++j) out.at(j, i) = a(i, j);
  return out;
}

MatZ block_diag(const MatZ& a, const MatZ& b) {
  check_same_ring(a, b);
  MatZ out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::uint32_t i = 0; i < a.rows(); ++i)
    for (std::uint32_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
  for (std::uint32_t i = 0; i < b.rows(); ++i)
    for (std::uint32_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

namespace {

// In-place elementary operations, with the mirrored updates that keep
// A = P * D * Q and the inverse factors exact at every step.
struct Elimination {
  explicit Elimination(const MatZ& a, bool track_transforms)
      : D(a), ring(a.ring()), track(track_transforms) {
    if (track) {
      P = MatZ::identity(ring, a.rows());
      P_inv = P;
      Q = MatZ::identity(ring, a.cols());
      Q_inv = Q;
    }
  }

  MatZ D;
  RingSpec ring;
  bool track;
  MatZ P, P_inv, Q, Q_inv;

  static void swap_rows(MatZ& M, std::uint32_t i, std::uint32_t j) {
    for (std::uint32_t c = 0; c < M.cols(); ++c) std::swap(M.at(i, c), M.at(j, c));
  }
  static void swap_cols(MatZ& M, std::uint32_t i, std::uint32_t j) {
    for (std::uint32_t r = 0; r < M.rows(); ++r) std::swap(M.at(r, i), M.at(r, j));
  }
  void scale_row(MatZ& M, std::uint32_t i, std::uint64_t c) const {
    for (std::uint32_t j = 0; j < M.cols(); ++j) M.at(i, j) = mul_mod(M(i, j), c, ring);
  }
  void scale_col(MatZ& M, std::uint32_t j, std::uint64_t c) const {
    for (std::uint32_t i = 0; i < M.rows(); ++i) M.at(i, j) = mul_mod(M(i, j), c, ring);
  }
  // row_dst += c * row_src
  void row_axpy(MatZ& M, std::uint32_t dst, std::uint32_t src, std::uint64_t c) const {
    for (std::uint32_t j = 0; j < M.cols(); ++j)
      M.at(dst, j) = add_mod(M(dst, j), mul_mod(c, M(src, j), ring), ring);
  }
  // col_dst += c * col_src
  void col_axpy(MatZ& M, std::uint32_t dst, std::uint32_t src, std::uint64_t c) const {
    for (std::uint32_t i = 0; i < M.rows(); ++i)
      M.at(i, dst) = add_mod(M(i, dst), mul_mod(c, M(i, src), ring), ring);
  }

  void pivot_swap_rows(std::uint32_t i, std::uint32_t j) {
    swap_rows(D, i, j);
    if (track) {
      swap_cols(P, i, j);
      swap_rows(P_inv, i, j);
    }
  }
  void pivot_swap_cols(std::uint32_t i, std::uint32_t j) {
    swap_cols(D, i, j);
    if (track) {
      swap_rows(Q, i, j);
      swap_cols(Q_inv, i, j);
    }
  }
  // D <- E D with E = diag(..., u_inv at k, ...); P absorbs E^{-1} on the right.
  void pivot_scale_row(std::uint32_t k, std::uint64_t u, std::uint64_t u_inv) {
    scale_row(D, k, u_inv);
    if (track) {
      scale_col(P, k, u);
      scale_row(P_inv, k, u_inv);
    }
  }
  // D's row i += c * row k.
  void pivot_row_axpy(std::uint32_t i, std::uint32_t k, std::uint64_t c) {
    row_axpy(D, i, k, c);
    if (track) {
      col_axpy(P, k, i, neg_mod(c, ring));  // P <- P E^{-1}
      row_axpy(P_inv, i, k, c);
    }
  }
  // D's col j += c * col k.
  void pivot_col_axpy(std::uint32_t j, std::uint32_t k, std::uint64_t c) {
    col_axpy(D, j, k, c);
    if (track) {
      row_axpy(Q, k, j, neg_mod(c, ring));  // Q <- F^{-1} Q
      col_axpy(Q_inv, j, k, c);
    }
  }

  // Returns the pivot valuations in encounter order.
  std::vector<std::uint32_t> run() {
    const std::uint32_t m = D.rows(), n = D.cols();
    const std::uint32_t lim = std::min(m, n);
    std::vector<std::uint32_t> exps;
    for (std::uint32_t k = 0; k < lim; ++k) {
      // Pivot: minimal valuation in the trailing block, ties by (row, col).
      std::uint32_t best_val = ring.s;
      std::uint32_t bi = k, bj = k;
      for (std::uint32_t i = k; i < m; ++i) {
        for (std::uint32_t j = k; j < n; ++j) {
          std::uint64_t v = D(i, j);
          if (v == 0) continue;
          std::uint32_t val = valuation(v, ring);
          if (val < best_val) {
            best_val = val;
            bi = i;
            bj = j;
            if (val == 0) break;
          }
        }
        if (best_val == 0) break;
      }
      if (best_val == ring.s) break;  // trailing block is zero
      if (bi != k) pivot_swap_rows(bi, k);
      if (bj != k) pivot_swap_cols(bj, k);

      const std::uint64_t pv = pow_u64(ring.p, best_val);
      const std::uint64_t u = D(k, k) / pv;  // exact; unit part of the pivot
      if (u != 1) pivot_scale_row(k, u, unit_inverse(u, ring));
      // All trailing entries have valuation >= best_val, so the quotients
      // below are exact integers and the eliminations land on exact zeros.
      for (std::uint32_t i = k + 1; i < m; ++i) {
        if (D(i, k) != 0) pivot_row_axpy(i, k, neg_mod(D(i, k) / pv, ring));
      }
      for (std::uint32_t j = k + 1; j < n; ++j) {
        if (D(k, j) != 0) pivot_col_axpy(j, k, neg_mod(D(k, j) / pv, ring));
      }
      exps.push_back(best_val);
    }
    // Global-minimum pivoting already yields nondecreasing exponents; the
    // sort documents the normal-form contract and guards the invariant.
    if (!std::is_sorted(exps.begin(), exps.end()))
      fail(errc::internal, "pivot valuations decreased during elimination");
    std::sort(exps.begin(), exps.end());
    return exps;
  }
};

std::pair<std::uint32_t, std::vector<std::uint32_t>> split_profile(
    const std::vector<std::uint32_t>& exps) {
  std::uint32_t r = 0;
  std::vector<std::uint32_t> ks;
  for (std::uint32_t v : exps) {
    if (v == 0)
      ++r;
    else
      ks.push_back(v);
  }
  return {r, ks};
}

}  // namespace

CanonicalForm canonical_form(const MatZ& a) {
  Elimination e(a, true);
  auto exps = e.run();
  auto [r, ks] = split_profile(exps);
  CanonicalForm cf;
  cf.P = std::move(e.P);
  cf.Q = std::move(e.Q);
  cf.P_inv = std::move(e.P_inv);
  cf.Q_inv = std::move(e.Q_inv);
  cf.r = r;
  cf.ks = std::move(ks);
  return cf;
}

MatZ CanonicalForm::diagonal() const {
  MatZ d(P.ring(), P.rows(), Q.rows());
  for (std::uint32_t i = 0; i < r; ++i) d.at(i, i) = 1;
  for (std::uint32_t j = 0; j < ks.size(); ++j)
    d.at(r + j, r + j) = pow_u64(P.ring().p, ks[j]);
  return d;
}

std::uint32_t inner_rank(const MatZ& a) {
  Elimination e(a, false);
  return static_cast<std::uint32_t>(e.run().size());
}

std::uint32_t mccoy_rank(const MatZ& a) {
  Elimination e(a, false);
  auto exps = e.run();
  return split_profile(exps).first;
}

std::uint32_t rank_distance(const MatZ& a, const MatZ& b) { return inner_rank(sub(a, b)); }

MatZ reduce_mod_p(const MatZ& a) {
  MatZ out(residue_field(a.ring()), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = a.data()[i] % a.ring().p;
  return out;
}

MatZ lift(const MatZ& a, const RingSpec& target) {
  if (target.p != a.ring().p || target.s < a.ring().s)
    fail(errc::ring_mismatch, "lift target must be Z_{p^t} with t >= s");
  MatZ out(target, a.rows(), a.cols());
  std::memcpy(out.data(), a.data(), a.size() * sizeof(std::uint64_t));
  return out;
}

MatZ lift_times_p(const MatZ& a, const RingSpec& target) {
  MatZ out = lift(a, target);
  kernels::scale_mod(out.data(), target.p, out.data(), out.size(), target.modulus);
  return out;
}

std::optional<MatZ> try_inverse(const MatZ& a) {
  if (a.rows() != a.cols()) fail(errc::shape_error, "inverse requires a square matrix");
  CanonicalForm cf = canonical_form(a);
  if (cf.r != a.rows()) return std::nullopt;
  return mul(cf.Q_inv, cf.P_inv);
}

std::optional<MatZ> right_inverse(const MatZ& a) {
  if (a.cols() < a.rows()) fail(errc::shape_error, "right inverse requires cols >= rows");
  CanonicalForm cf = canonical_form(a);
  if (cf.r != a.rows()) return std::nullopt;
  MatZ embed(a.ring(), a.cols(), a.rows());
  for (std::uint32_t i = 0; i < a.rows(); ++i) embed.at(i, i) = 1;
  return mul(mul(cf.Q_inv, embed), cf.P_inv);
}

std::uint32_t inner_rank_oracle(const MatZ& a) {
  if (a.rows() > 3 || a.cols() > 3 || a.ring().modulus > 9)
    fail(errc::too_large, "oracle is restricted to dims <= 3 and p^s <= 9");
  if (a.is_zero()) return 0;
  const MatZ M = a.rows() <= a.cols() ? a : transpose(a);
  const std::uint32_t m = M.rows(), n = M.cols();
  const std::uint64_t mod = M.ring().modulus;
  const RingSpec& ring = M.ring();

  // Column j of M encoded in base mod; a candidate rank r works iff every
  // column lies in the image {B x : x in R^r} of some B in R^{m x r}.
  std::vector<std::uint64_t> col_codes(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < m; ++i) code = code * mod + M(i, j);
    col_codes[j] = code;
  }

  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < m; ++i) space *= mod;
  std::vector<char> image(space);

  for (std::uint32_t r = 1; r < std::min(m, n); ++r) {
    const std::uint64_t b_count = pow_u64(mod, m * r);
    const std::uint64_t x_count = pow_u64(mod, r);
    std::vector<std::uint64_t> B(std::size_t(m) * r);
    for (std::uint64_t bi = 0; bi < b_count; ++bi) {
      std::uint64_t t = bi;
      for (auto& e : B) {
        e = t % mod;
        t /= mod;
      }
      std::fill(image.begin(), image.end(), 0);
      std::vector<std::uint64_t> x(r);
      for (std::uint64_t xi = 0; xi < x_count; ++xi) {
        std::uint64_t tx = xi;
        for (auto& e : x) {
          e = tx % mod;
          tx /= mod;
        }
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
          std::uint64_t acc = 0;
          for (std::uint32_t c = 0; c < r; ++c)
            acc = add_mod(acc, mul_mod(B[std::size_t(i) * r + c], x[c], ring), ring);
          code = code * mod + acc;
        }
        image[code] = 1;
      }
      bool all = true;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (!image[col_codes[j]]) {
          all = false;
          break;
        }
      }
      if (all) return r;
    }
  }
  return std::min(m, n);
}

namespace {

// Invertible W over F_2 with I - W also invertible, for any size k >= 2.
MatZ f2_complement_core(const RingSpec& f2, std::uint32_t k) {
  if (k == 2) return MatZ::from_rows(f2, {{1, 1}, {1, 0}});
  if (k == 3) return MatZ::from_rows(f2, {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  if (k % 2 == 0) {
    std::uint32_t h = k / 2;
    MatZ w(f2, k, k);
    for (std::uint32_t i = 0; i < h; ++i) {
      w.at(i, i) = 1;
      w.at(i, h + i) = 1;
      w.at(h + i, i) = 1;
    }
    return w;
  }
  return block_diag(f2_complement_core(f2, 3), f2_complement_core(f2, k - 3));
}

}  // namespace

MatZ find_invertible_complement(const MatZ& a) {
  const RingSpec& ring = a.ring();
  if (!ring.is_field()) fail(errc::bad_parameters, "complement construction requires s = 1");
  if (a.rows() != a.cols()) fail(errc::shape_error, "complement construction requires a square matrix");
  const std::uint32_t k = a.rows();
  if (k < 2) fail(errc::shape_error, "complement construction requires size >= 2");

  CanonicalForm cf = canonical_form(a);
  const std::uint32_t r = cf.r;
  MatZ core(ring, k, k);
  if (ring.p >= 3) {
    // D - 2I: nonzero diagonal whether the entry is 1 or 0, and the gap is 2I.
    core = cf.diagonal();
    const std::uint64_t two = 2 % ring.modulus;
    for (std::uint32_t i = 0; i < k; ++i) core.at(i, i) = sub_mod(core(i, i), two, ring);
  } else {
    if (r == 0) {
      core = MatZ::identity(ring, k);
    } else if (r == 1) {
      core = k == 2 ? f2_complement_core(ring, 2)
                    : block_diag(f2_complement_core(ring, 2), MatZ::identity(ring, k - 2));
    } else {
      core = r == k ? f2_complement_core(ring, r)
                    : block_diag(f2_complement_core(ring, r), MatZ::identity(ring, k - r));
    }
  }
  return mul(mul(cf.P, core), cf.Q);
}

MatZ random_matrix(const RingSpec& ring, std::uint32_t m, std::uint32_t n, Rng& rng) {
  MatZ a(ring, m, n);
  for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] = rng.below(ring.modulus);
  return a;
}

MatZ random_matrix(const RingSpec& ring, std::uint32_t m, std::uint32_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(ring, m, n, rng);
}

MatZ random_invertible(const RingSpec& ring, std::uint32_t n, Rng& rng) {
  for (;;) {
    MatZ a = random_matrix(ring, n, n, rng);
    if (try_inverse(a)) return a;
  }
}

MatZ random_invertible(const RingSpec& ring, std::uint32_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_invertible(ring, n, rng);
}

}  // namespace zps
