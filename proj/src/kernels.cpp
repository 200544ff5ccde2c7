#include "zps/kernels.hpp"

#include "zps/errors.hpp"

namespace zps::kernels {

#if defined(ZPS_HAVE_AVX2)
const Table* avx2_table();  // defined in kernels_avx2.cpp; null when the CPU lacks AVX2
#endif
#if defined(ZPS_HAVE_NEON)
const Table* neon_table();  // defined in kernels_neon.cpp
#endif

namespace {

void add_mod_scalar(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                    std::size_t n, std::uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = a[i] + b[i];  // no wrap: both < m < 2^63
    dst[i] = t >= m ? t - m : t;
  }
}

void sub_mod_scalar(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                    std::size_t n, std::uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = a[i] - b[i];
    dst[i] = a[i] < b[i] ? t + m : t;
  }
}

void neg_mod_scalar(const std::uint64_t* a, std::uint64_t* dst, std::size_t n, std::uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] == 0 ? 0 : m - a[i];
}

const Table scalar_table{add_mod_scalar, sub_mod_scalar, neg_mod_scalar, "scalar"};

const Table* detect_best() {
#if defined(ZPS_HAVE_AVX2)
  if (const Table* t = avx2_table()) return t;
#endif
#if defined(ZPS_HAVE_NEON)
  if (const Table* t = neon_table()) return t;
#endif
  return &scalar_table;
}

const Table*& active_slot() {
  static const Table* slot = detect_best();
  return slot;
}

}  // namespace

const Table& scalar() { return scalar_table; }

const Table& active() { return *active_slot(); }

void force(const std::string& name) {
  for (const Table* t : available()) {
    if (name == t->name) {
      active_slot() = t;
      return;
    }
  }
  fail(errc::bad_parameters, "unknown kernel backend '" + name + "'");
}

std::vector<const Table*> available() {
  std::vector<const Table*> out{&scalar_table};
#if defined(ZPS_HAVE_AVX2)
  if (const Table* t = avx2_table()) out.push_back(t);
#endif
#if defined(ZPS_HAVE_NEON)
  if (const Table* t = neon_table()) out.push_back(t);
#endif
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

void scale_mod(const std::uint64_t* a, std::uint64_t c, std::uint64_t* dst, std::size_t n,
               std::uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = mul_mod(a[i], c, m);
}

}  // namespace zps::kernels
