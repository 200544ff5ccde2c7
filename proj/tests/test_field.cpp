#include <doctest.h>

#include <cstdint>
#include <vector>

#include <zps/field.hpp>
#include <zps/rng.hpp>

#include "test_util.hpp"

using namespace zps;

namespace {

// Independent irreducibility check: f (monic, low-degree-first) has no
// monic divisor of degree 1..deg/2. Polynomials are represented as integer
// encodings sum c_i p^i and multiplied positionally mod p.
bool divides(const std::vector<std::uint64_t>& g, std::vector<std::uint64_t> f, std::uint64_t p) {
  while (f.size() >= g.size()) {
    std::uint64_t lead = f.back();
    if (lead != 0) {
      std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i)
        f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    }
    f.pop_back();
  }
  for (auto c : f)
    if (c != 0) return false;
  return true;
}

bool irreducible_oracle(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  std::uint32_t n = static_cast<std::uint32_t>(f.size()) - 1;
  for (std::uint32_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> g(deg + 1, 0);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < deg; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[deg] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("build_field picks the smallest-encoding monic irreducible") {
  CHECK(build_field(2, 2).irreducible == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(build_field(2, 3).irreducible == std::vector<std::uint64_t>{1, 1, 0, 1});
  CHECK(build_field(3, 2).irreducible == std::vector<std::uint64_t>{1, 0, 1});

  // oracle: no monic irreducible of the same degree has a smaller encoding
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 8}}) {
    FieldSpec f = build_field(p, n);
    REQUIRE(f.irreducible.size() == n + 1);
    CHECK(f.irreducible[n] == 1);
    CHECK(irreducible_oracle(f.irreducible, p));
    std::uint64_t enc = 0, pw = 1;
    for (std::uint32_t i = 0; i < n; ++i, pw *= p) enc += f.irreducible[i] * pw;
    for (std::uint64_t smaller = 0; smaller < enc; ++smaller) {
      std::vector<std::uint64_t> cand(n + 1, 0);
      std::uint64_t v = smaller;
      for (std::uint32_t i = 0; i < n; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      cand[n] = 1;
      CHECK(!irreducible_oracle(cand, p));
    }
  }

  CHECK(test::thrown_kind([] { build_field(4, 2); }) == errc::composite_modulus_base);
  CHECK(test::thrown_kind([] { build_field(2, 9); }) == errc::too_large);
  CHECK(test::thrown_kind([] { build_field(257, 3); }) == errc::too_large);
  CHECK(test::thrown_kind([] { build_field(2, 0); }) == errc::bad_parameters);
}

TEST_CASE("field axioms hold exhaustively in F_4 and F_9") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 2}}) {
    FieldSpec f = build_field(p, n);
    const std::uint64_t q = f.q;
    for (std::uint64_t i = 0; i < q; ++i) {
      FieldElement a = fe_from_index(f, i);
      CHECK(fe_index(a) == i);
      CHECK(fe_add(a, fe_zero(f)) == a);
      CHECK(fe_mul(a, fe_one(f)) == a);
      CHECK(fe_is_zero(fe_sub(a, a)));
      if (!fe_is_zero(a)) {
        CHECK(fe_mul(a, fe_inv(a)) == fe_one(f));
        CHECK(fe_pow(a, q - 1) == fe_one(f));
      }
      for (std::uint64_t j = 0; j < q; ++j) {
        FieldElement b = fe_from_index(f, j);
        CHECK(fe_add(a, b) == fe_add(b, a));
        CHECK(fe_mul(a, b) == fe_mul(b, a));
        for (std::uint64_t k = 0; k < q; ++k) {
          FieldElement c = fe_from_index(f, k);
          CHECK(fe_mul(a, fe_add(b, c)) == fe_add(fe_mul(a, b), fe_mul(a, c)));
          CHECK(fe_mul(fe_mul(a, b), c) == fe_mul(a, fe_mul(b, c)));
        }
      }
    }
    CHECK(test::thrown_kind([&] { fe_inv(fe_zero(f)); }) == errc::division_by_zero);
  }
}

TEST_CASE("frobenius generates the Galois group") {
  FieldSpec f8 = build_field(2, 3);
  for (std::uint64_t i = 0; i < 8; ++i) {
    FieldElement a = fe_from_index(f8, i);
    CHECK(fe_frobenius(a) == fe_mul(a, a));
    FieldElement it = a;
    for (std::uint32_t k = 0; k < 3; ++k) it = fe_frobenius(it);
    CHECK(it == a);  // order n
    for (std::uint64_t j = 0; j < 8; ++j) {
      FieldElement b = fe_from_index(f8, j);
      CHECK(fe_frobenius(fe_add(a, b)) == fe_add(fe_frobenius(a), fe_frobenius(b)));
      CHECK(fe_frobenius(fe_mul(a, b)) == fe_mul(fe_frobenius(a), fe_frobenius(b)));
    }
  }
  // frobenius is not the identity on the full field (it generates, not fixes)
  FieldSpec f9 = build_field(3, 2);
  bool moved = false;
  for (std::uint64_t i = 0; i < 9 && !moved; ++i)
    moved = !(fe_frobenius(fe_from_index(f9, i)) == fe_from_index(f9, i));
  CHECK(moved);
}

TEST_CASE("coordinate columns realize the vector-space view") {
  FieldSpec f8 = build_field(2, 3);
  CHECK(element_to_column(fe_zero(f8)).is_zero());
  for (std::uint32_t i = 0; i < 3; ++i) {
    FieldElement basis = fe_zero(f8);
    basis.c[i] = 1;
    MatZ col = element_to_column(basis);
    REQUIRE(col.rows() == 3);
    REQUIRE(col.cols() == 1);
    for (std::uint32_t r = 0; r < 3; ++r) CHECK(col(r, 0) == (r == i ? 1u : 0u));
  }
  for (std::uint64_t i = 0; i < 8; ++i) {
    FieldElement a = fe_from_index(f8, i);
    CHECK(element_from_column(element_to_column(a), f8) == a);
  }
  // additive bijection
  for (std::uint64_t i = 0; i < 8; ++i)
    for (std::uint64_t j = 0; j < 8; ++j) {
      FieldElement a = fe_from_index(f8, i), b = fe_from_index(f8, j);
      CHECK(element_to_column(fe_add(a, b)) ==
            element_to_column(a) + element_to_column(b));
    }
}

TEST_CASE("linearized evaluation is additive and prime-field linear") {
  FieldSpec f9 = build_field(3, 2);
  LinearizedPoly ident{&f9, {fe_one(f9)}};
  LinearizedPoly zero{&f9, {}};
  Rng rng(71);
  for (std::uint64_t i = 0; i < 9; ++i) {
    FieldElement a = fe_from_index(f9, i);
    CHECK(linearized_eval(ident, a) == a);
    CHECK(fe_is_zero(linearized_eval(zero, a)));
  }
  LinearizedPoly mixed{&f9, {fe_from_index(f9, 4), fe_from_index(f9, 7)}};
  for (int t = 0; t < 200; ++t) {
    FieldElement x = fe_from_index(f9, rng.below(9));
    FieldElement y = fe_from_index(f9, rng.below(9));
    CHECK(linearized_eval(mixed, fe_add(x, y)) ==
          fe_add(linearized_eval(mixed, x), linearized_eval(mixed, y)));
    // scalars from the prime subfield commute through
    for (std::uint64_t c = 0; c < 3; ++c) {
      FieldElement ce = fe_from_index(f9, c);
      CHECK(linearized_eval(mixed, fe_mul(ce, x)) == fe_mul(ce, linearized_eval(mixed, x)));
    }
  }
  FieldSpec f4 = build_field(2, 2);
  CHECK(test::thrown_kind([&] { linearized_eval(mixed, fe_zero(f4)); }) == errc::field_mismatch);
}
