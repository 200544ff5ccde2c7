#include "zps/field.hpp"

#include <algorithm>

namespace zps {

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, entries in [0, p)

std::uint32_t degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<std::uint32_t>(i);
  return 0;  // the zero polynomial also reports 0; callers check emptiness separately
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

void trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// a mod b for monic-leading b (leading coefficient inverted explicitly).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  Poly bb = b;
  trim(bb);
  const std::uint32_t db = degree(bb);
  const RingSpec fp{p, 1, p};
  const std::uint64_t lead_inv = unit_inverse(bb[db], fp);
  while (!poly_is_zero(a) && degree(a) >= db) {
    const std::uint32_t da = degree(a);
    const std::uint64_t factor = (a[da] * lead_inv) % p;
    const std::uint32_t shift = da - db;
    for (std::uint32_t i = 0; i <= db; ++i) {
      std::uint64_t t = (factor * bb[i]) % p;
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t len, std::uint64_t p) {
  Poly c(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

// Trial division by every monic polynomial of degree 1 .. n/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::uint32_t n = degree(f);
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = poly_from_index(idx, d + 1, p);
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

void check_field(const FieldElement& a) {
  if (!a.field || a.c.size() != a.field->n) fail(errc::field_mismatch, "element lacks a valid field");
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
  check_field(a);
  check_field(b);
  if (a.field != b.field && !(*a.field == *b.field))
    fail(errc::field_mismatch, "elements from different fields");
}

}  // namespace

FieldSpec build_field(std::uint64_t p, std::uint32_t n) {
  if (!is_prime_u64(p)) fail(errc::composite_modulus_base, "p = " + std::to_string(p) + " is not prime");
  if (n < 1) fail(errc::bad_parameters, "extension degree must be at least 1");
  if (n > 8) fail(errc::too_large, "extension degree exceeds the desk-scale cap of 8");
  std::uint64_t q = checked_pow(p, n, std::uint64_t(1) << 62);
  if (q > (std::uint64_t(1) << 16)) fail(errc::too_large, "field order exceeds 2^16");

  FieldSpec f;
  f.p = p;
  f.n = n;
  f.q = q;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly cand = poly_from_index(idx, n + 1, p);
    cand[n] = 1;
    if (is_irreducible(cand, p)) {
      f.irreducible = cand;
      break;
    }
  }
  if (f.irreducible.empty()) fail(errc::internal, "no irreducible polynomial found");
  return f;
}

FieldElement fe_zero(const FieldSpec& f) { return FieldElement{&f, Poly(f.n, 0)}; }

FieldElement fe_one(const FieldSpec& f) {
  FieldElement x = fe_zero(f);
  x.c[0] = 1 % f.p;
  return x;
}

FieldElement fe_from_index(const FieldSpec& f, std::uint64_t index) {
  if (index >= f.q) fail(errc::bad_parameters, "element index out of range");
  return FieldElement{&f, poly_from_index(index, f.n, f.p)};
}

std::uint64_t fe_index(const FieldElement& x) {
  check_field(x);
  std::uint64_t idx = 0;
  for (std::size_t i = x.c.size(); i-- > 0;) idx = idx * x.field->p + x.c[i];
  return idx;
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  FieldElement out{a.field, Poly(a.c.size())};
  const std::uint64_t p = a.field->p;
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = (a.c[i] + b.c[i]) % p;
  return out;
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  FieldElement out{a.field, Poly(a.c.size())};
  const std::uint64_t p = a.field->p;
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = (a.c[i] + p - b.c[i]) % p;
  return out;
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  const FieldSpec& f = *a.field;
  Poly prod = poly_mul(a.c, b.c, f.p);
  Poly red = poly_mod(std::move(prod), f.irreducible, f.p);
  red.resize(f.n, 0);
  return FieldElement{a.field, std::move(red)};
}

bool fe_is_zero(const FieldElement& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](std::uint64_t v) { return v == 0; });
}

FieldElement fe_pow(const FieldElement& a, std::uint64_t e) {
  check_field(a);
  FieldElement base = a;
  FieldElement acc = fe_one(*a.field);
  while (e) {
    if (e & 1) acc = fe_mul(acc, base);
    base = fe_mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElement fe_inv(const FieldElement& a) {
  check_field(a);
  if (fe_is_zero(a)) fail(errc::division_by_zero, "zero has no inverse");
  // x^(q-2) = x^{-1} in F_q.
  return fe_pow(a, a.field->q - 2);
}

FieldElement fe_frobenius(const FieldElement& a) {
  check_field(a);
  return fe_pow(a, a.field->p);
}

MatZ element_to_column(const FieldElement& x) {
  check_field(x);
  MatZ col(RingSpec{x.field->p, 1, x.field->p}, x.field->n, 1);
  for (std::uint32_t i = 0; i < x.field->n; ++i) col.at(i, 0) = x.c[i];
  return col;
}

FieldElement element_from_column(const MatZ& col, const FieldSpec& f) {
  if (col.cols() != 1 || col.rows() != f.n || col.ring().modulus != f.p)
    fail(errc::field_mismatch, "column shape does not match the field");
  FieldElement x{&f, Poly(f.n)};
  for (std::uint32_t i = 0; i < f.n; ++i) x.c[i] = col(i, 0);
  return x;
}

FieldElement linearized_eval(const LinearizedPoly& f, const FieldElement& x) {
  if (!f.field) fail(errc::field_mismatch, "polynomial lacks a field");
  check_field(x);
  if (!(*f.field == *x.field)) fail(errc::field_mismatch, "argument from a different field");
  FieldElement acc = fe_zero(*f.field);
  FieldElement power = x;  // x^{p^i}
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i > 0) power = fe_frobenius(power);
    acc = fe_add(acc, fe_mul(f.coeffs[i], power));
  }
  return acc;
}

}  // namespace zps
