#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zps/ring.hpp"
#include "zps/rng.hpp"

namespace zps {

// Dense row-major matrix over Z_{p^s}. Entries are canonical representatives.
class MatZ {
public:
  MatZ() = default;
  MatZ(const RingSpec& ring, std::uint32_t rows, std::uint32_t cols);  // zero matrix

  static MatZ identity(const RingSpec& ring, std::uint32_t n);
  // Convenience constructor; entries may be any integers and are reduced.
  static MatZ from_rows(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }
  const RingSpec& ring() const noexcept { return ring_; }

  std::uint64_t operator()(std::uint32_t i, std::uint32_t j) const { return e_[std::size_t(i) * cols_ + j]; }
  std::uint64_t& at(std::uint32_t i, std::uint32_t j) { return e_[std::size_t(i) * cols_ + j]; }

  const std::uint64_t* data() const noexcept { return e_.data(); }
  std::uint64_t* data() noexcept { return e_.data(); }
  std::size_t size() const noexcept { return e_.size(); }

  bool is_zero() const noexcept;

  friend bool operator==(const MatZ&, const MatZ&) = default;

private:
  RingSpec ring_;
  std::uint32_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> e_;
};

// Row-major lexicographic order on entries; ties broken never needed because
// callers compare matrices of identical shape.
bool lex_less(const MatZ& a, const MatZ& b);

MatZ add(const MatZ& a, const MatZ& b);
MatZ sub(const MatZ& a, const MatZ& b);
MatZ neg(const MatZ& a);
MatZ mul(const MatZ& a, const MatZ& b);
MatZ scalar_mul(std::uint64_t c, const MatZ& a);
MatZ transpose(const MatZ& a);
MatZ block_diag(const MatZ& a, const MatZ& b);

inline MatZ operator+(const MatZ& a, const MatZ& b) { return add(a, b); }
inline MatZ operator-(const MatZ& a, const MatZ& b) { return sub(a, b); }
inline MatZ operator*(const MatZ& a, const MatZ& b) { return mul(a, b); }

// Equivalence normal form A = P * D * Q with P, Q invertible and
// D = diag(1, ..., 1, p^{k_1}, ..., p^{k_t}, 0, ..., 0), r ones and
// exponents nondecreasing in [1, s-1]. (r, ks) is an equivalence invariant.
struct CanonicalForm {
  MatZ P, Q;
  MatZ P_inv, Q_inv;  // maintained alongside; P * P_inv = I, Q * Q_inv = I
  std::uint32_t r = 0;
  std::vector<std::uint32_t> ks;

  std::uint32_t inner_rank() const noexcept { return r + static_cast<std::uint32_t>(ks.size()); }
  MatZ diagonal() const;  // rebuilds D at the factored shape
};

CanonicalForm canonical_form(const MatZ& a);

// Smallest r such that A factors through r columns; equals r + t above.
std::uint32_t inner_rank(const MatZ& a);

// McCoy rank: number of unit entries in the normal form; equals the rank of
// the mod-p reduction over the residue field.
std::uint32_t mccoy_rank(const MatZ& a);

std::uint32_t rank_distance(const MatZ& a, const MatZ& b);

// Entrywise reduction mod p; the natural map onto the residue field.
MatZ reduce_mod_p(const MatZ& a);

// Entrywise inclusion of representatives into a larger ring Z_{p^t}, t >= s.
MatZ lift(const MatZ& a, const RingSpec& target);

// Same inclusion followed by multiplication by p.
MatZ lift_times_p(const MatZ& a, const RingSpec& target);

// Two-sided inverse when it exists (square A with full McCoy rank).
std::optional<MatZ> try_inverse(const MatZ& a);

// For m x n with n >= m: B with A * B = I_m, present iff McCoy rank is m.
// shape_error when n < m.
std::optional<MatZ> right_inverse(const MatZ& a);

// Definitional inner rank by exhaustive search over factorizations.
// Hard guard: rows, cols <= 3 and p^s <= 9; too_large beyond that.
std::uint32_t inner_rank_oracle(const MatZ& a);

// Over a field (s = 1), square k x k with k >= 2: returns invertible B such
// that A - B is also invertible.
MatZ find_invertible_complement(const MatZ& a);

MatZ random_matrix(const RingSpec& ring, std::uint32_t m, std::uint32_t n, Rng& rng);
MatZ random_matrix(const RingSpec& ring, std::uint32_t m, std::uint32_t n, std::uint64_t seed);
MatZ random_invertible(const RingSpec& ring, std::uint32_t n, Rng& rng);
MatZ random_invertible(const RingSpec& ring, std::uint32_t n, std::uint64_t seed);

}  // namespace zps
