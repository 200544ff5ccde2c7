#pragma once

#include <cstdint>
#include <vector>

#include "zps/errors.hpp"

namespace zps {

// Deterministic Miller-Rabin with a witness set covering all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) noexcept;

// base^exp with overflow detection; the cap keeps a+b and the 128-bit
// products used everywhere exact.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t cap);

// The ring Z_{p^s} of integers modulo a prime power. Elements are stored as
// least nonnegative representatives in [0, p^s).
struct RingSpec {
  std::uint64_t p = 0;
  std::uint32_t s = 0;
  std::uint64_t modulus = 0;

  bool is_field() const noexcept { return s == 1; }
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Validates primality of p, s >= 1, and that p^s stays below 2^62.
RingSpec make_ring(std::uint64_t p, std::uint32_t s);

// Z_p, the residue field of ring.
RingSpec residue_field(const RingSpec& ring);

// Low-level arithmetic on canonical representatives.
std::uint64_t norm_mod(std::int64_t v, const RingSpec& ring);
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, const RingSpec& ring);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, const RingSpec& ring);
std::uint64_t neg_mod(std::uint64_t a, const RingSpec& ring);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, const RingSpec& ring);

// p-adic valuation of a representative; 0 maps to s by convention.
std::uint32_t valuation(std::uint64_t v, const RingSpec& ring);

bool is_unit_value(std::uint64_t v, const RingSpec& ring);
bool in_radical_value(std::uint64_t v, const RingSpec& ring);

// Inverse of a unit via extended Euclid; division_by_zero if v is not a unit.
std::uint64_t unit_inverse(std::uint64_t v, const RingSpec& ring);

struct Residue {
  std::uint64_t value = 0;
  RingSpec ring;

  friend bool operator==(const Residue&, const Residue&) = default;
};

Residue residue(std::uint64_t value, const RingSpec& ring);

Residue add(const Residue& a, const Residue& b);
Residue sub(const Residue& a, const Residue& b);
Residue neg(const Residue& a);
Residue mul(const Residue& a, const Residue& b);
Residue inverse(const Residue& a);

bool is_unit(const Residue& a);
bool is_in_radical(const Residue& a);

// x = u * p^t with u a unit; unique for x != 0. zero_input on x = 0.
struct UnitDecomposition {
  Residue unit;
  std::uint32_t t = 0;
};
UnitDecomposition unit_decompose(const Residue& x);

// Base-p digits, least significant first, always length s.
std::vector<std::uint64_t> padic_digits(const Residue& x);

// Inverse of padic_digits: wrong_length unless exactly s digits,
// digit_out_of_range unless every digit is in [0, p).
Residue digits_compose(const std::vector<std::uint64_t>& digits, const RingSpec& ring);

}  // namespace zps
