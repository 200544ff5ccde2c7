#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zps::kernels {

// Entrywise arithmetic on arrays of residues. Inputs must already be reduced
// into [0, m) with m < 2^63; outputs are reduced. dst may alias a or b.
//
// Only the additive ops have SIMD variants: they are single-lane
// compare/select patterns. Per-entry multiplication needs a 128-bit product
// and a modulo, which does not vectorize usefully at these sizes, so
// scale_mod and mul_mod below are scalar on every backend.
struct Table {
  void (*add_mod)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                  std::size_t n, std::uint64_t m);
  void (*sub_mod)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                  std::size_t n, std::uint64_t m);
  void (*neg_mod)(const std::uint64_t* a, std::uint64_t* dst, std::size_t n, std::uint64_t m);
  const char* name;
};

// Reference implementation; the ground truth for equivalence tests.
const Table& scalar();

// Variant selected at startup from runtime CPU detection. Defaults to the
// widest supported backend; force() overrides it (test hook, also honours
// unknown-name errors so typos fail loudly).
const Table& active();
void force(const std::string& name);

// All backends usable on this machine, scalar first.
std::vector<const Table*> available();

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
void scale_mod(const std::uint64_t* a, std::uint64_t c, std::uint64_t* dst, std::size_t n,
               std::uint64_t m);

}  // namespace zps::kernels
