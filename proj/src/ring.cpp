#include "zps/ring.hpp"

#include <numeric>

#include "zps/kernels.hpp"

namespace zps {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = static_cast<std::uint64_t>((u128(r) * base) % mod);
    base = static_cast<std::uint64_t>((u128(base) * base) % mod);
    exp >>= 1;
  }
  return r;
}

void check_same_ring(const Residue& a, const Residue& b) {
  if (a.ring != b.ring) fail(errc::ring_mismatch, "residues from different rings");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic for every 64-bit integer.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = static_cast<std::uint64_t>((u128(x) * x) % n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) fail(errc::overflow, "power exceeds supported range");
    r *= base;
    if (r > cap) fail(errc::overflow, "power exceeds supported range");
  }
  return r;
}

RingSpec make_ring(std::uint64_t p, std::uint32_t s) {
  if (!is_prime_u64(p)) fail(errc::composite_modulus_base, "p = " + std::to_string(p) + " is not prime");
  if (s == 0) fail(errc::bad_parameters, "exponent s must be at least 1");
  constexpr std::uint64_t cap = std::uint64_t(1) << 62;
  std::uint64_t modulus = checked_pow(p, s, cap);
  return RingSpec{p, s, modulus};
}

RingSpec residue_field(const RingSpec& ring) { return RingSpec{ring.p, 1, ring.p}; }

std::uint64_t norm_mod(std::int64_t v, const RingSpec& ring) {
  std::int64_t m = static_cast<std::int64_t>(ring.modulus);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, const RingSpec& ring) {
  std::uint64_t t = a + b;
  return t >= ring.modulus ? t - ring.modulus : t;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, const RingSpec& ring) {
  return a < b ? a - b + ring.modulus : a - b;
}

std::uint64_t neg_mod(std::uint64_t a, const RingSpec& ring) { return a == 0 ? 0 : ring.modulus - a; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, const RingSpec& ring) {
  return kernels::mul_mod(a, b, ring.modulus);
}

std::uint32_t valuation(std::uint64_t v, const RingSpec& ring) {
  if (v == 0) return ring.s;
  std::uint32_t t = 0;
  while (v % ring.p == 0) {
    v /= ring.p;
    ++t;
  }
  return t;
}

bool is_unit_value(std::uint64_t v, const RingSpec& ring) { return v % ring.p != 0; }

bool in_radical_value(std::uint64_t v, const RingSpec& ring) { return v % ring.p == 0; }

std::uint64_t unit_inverse(std::uint64_t v, const RingSpec& ring) {
  if (!is_unit_value(v, ring)) fail(errc::division_by_zero, "element is not a unit");
  // Extended Euclid on (v, modulus); gcd is 1 because v is a unit.
  std::int64_t r0 = static_cast<std::int64_t>(ring.modulus), r1 = static_cast<std::int64_t>(v);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return norm_mod(t0, ring);
}

Residue residue(std::uint64_t value, const RingSpec& ring) {
  return Residue{value % ring.modulus, ring};
}

Residue add(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  return Residue{add_mod(a.value, b.value, a.ring), a.ring};
}

Residue sub(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  return Residue{sub_mod(a.value, b.value, a.ring), a.ring};
}

Residue neg(const Residue& a) { return Residue{neg_mod(a.value, a.ring), a.ring}; }

Residue mul(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  return Residue{mul_mod(a.value, b.value, a.ring), a.ring};
}

Residue inverse(const Residue& a) { return Residue{unit_inverse(a.value, a.ring), a.ring}; }

bool is_unit(const Residue& a) { return is_unit_value(a.value, a.ring); }

bool is_in_radical(const Residue& a) { return in_radical_value(a.value, a.ring); }

UnitDecomposition unit_decompose(const Residue& x) {
  if (x.value == 0) fail(errc::zero_input, "zero has no unit decomposition");
  std::uint32_t t = valuation(x.value, x.ring);
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < t; ++i) scale *= x.ring.p;
  return UnitDecomposition{Residue{x.value / scale, x.ring}, t};
}

std::vector<std::uint64_t> padic_digits(const Residue& x) {
  std::vector<std::uint64_t> digits(x.ring.s);
  std::uint64_t v = x.value;
  for (std::uint32_t i = 0; i < x.ring.s; ++i) {
    digits[i] = v % x.ring.p;
    v /= x.ring.p;
  }
  return digits;
}

Residue digits_compose(const std::vector<std::uint64_t>& digits, const RingSpec& ring) {
  if (digits.size() != ring.s)
    fail(errc::wrong_length, "expected " + std::to_string(ring.s) + " digits, got " +
                                 std::to_string(digits.size()));
  std::uint64_t v = 0;
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < ring.s; ++i) {
    if (digits[i] >= ring.p)
      fail(errc::digit_out_of_range,
           "digit " + std::to_string(digits[i]) + " at position " + std::to_string(i));
    v += digits[i] * scale;
    scale *= ring.p;
  }
  return Residue{v, ring};
}

}  // namespace zps
