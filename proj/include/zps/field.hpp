#pragma once

#include <cstdint>
#include <vector>

#include "zps/matrix.hpp"
#include "zps/ring.hpp"

namespace zps {

// F_{p^n} presented as F_p[x] / (f) for a fixed monic irreducible f chosen
// deterministically: among monic degree-n candidates x^n + sum c_i x^i, the
// one whose coefficient vector (c_0, ..., c_{n-1}) encodes the smallest
// integer sum c_i p^i. Elements are coordinate vectors in the basis
// 1, x, ..., x^{n-1}.
struct FieldSpec {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t q = 0;                      // p^n
  std::vector<std::uint64_t> irreducible;   // length n+1, low degree first, monic

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// p prime, 1 <= n <= 8, p^n <= 2^16.
FieldSpec build_field(std::uint64_t p, std::uint32_t n);

// Elements keep a pointer to their field; the FieldSpec must outlive them.
struct FieldElement {
  const FieldSpec* field = nullptr;
  std::vector<std::uint64_t> c;  // n coordinates in [0, p)

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c == b.c && (a.field == b.field || (a.field && b.field && *a.field == *b.field));
  }
};

FieldElement fe_zero(const FieldSpec& f);
FieldElement fe_one(const FieldSpec& f);

// Bijection with [0, q): index sum c_i p^i.
FieldElement fe_from_index(const FieldSpec& f, std::uint64_t index);
std::uint64_t fe_index(const FieldElement& x);

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_inv(const FieldElement& a);  // division_by_zero on 0
FieldElement fe_pow(const FieldElement& a, std::uint64_t e);
FieldElement fe_frobenius(const FieldElement& a);  // a^p

bool fe_is_zero(const FieldElement& a);

// Coordinates as an n x 1 matrix over Z_p.
MatZ element_to_column(const FieldElement& x);
FieldElement element_from_column(const MatZ& col, const FieldSpec& f);

// f(z) = sum_i coeffs[i] * z^{p^i}; additive and F_p-linear in z.
struct LinearizedPoly {
  const FieldSpec* field = nullptr;
  std::vector<FieldElement> coeffs;
};

FieldElement linearized_eval(const LinearizedPoly& f, const FieldElement& x);

}  // namespace zps
