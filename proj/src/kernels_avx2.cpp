// AVX2 backend for the additive entrywise kernels. Compiled with -mavx2 on
// x86-64 only; selection happens at runtime, so the rest of the library never
// executes these instructions on unsupported CPUs.

#include "zps/kernels.hpp"

#include <immintrin.h>

namespace zps::kernels {

namespace {

// AVX2 has no unsigned 64-bit compare; XOR with the sign bit maps unsigned
// order onto signed order.
inline __m256i bias(__m256i v) { return _mm256_xor_si256(v, _mm256_set1_epi64x(INT64_MIN)); }

void add_mod_avx2(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                  std::size_t n, std::uint64_t m) {
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i t = _mm256_add_epi64(va, vb);
    // t >= m  <=>  !(m > t)
    __m256i lt = _mm256_cmpgt_epi64(bias(vm), bias(t));
    __m256i corr = _mm256_andnot_si256(lt, vm);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi64(t, corr));
  }
  for (; i < n; ++i) {
    std::uint64_t t = a[i] + b[i];
    dst[i] = t >= m ? t - m : t;
  }
}

void sub_mod_avx2(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                  std::size_t n, std::uint64_t m) {
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i t = _mm256_sub_epi64(va, vb);
    __m256i borrow = _mm256_cmpgt_epi64(bias(vb), bias(va));  // b > a
    __m256i corr = _mm256_and_si256(borrow, vm);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(t, corr));
  }
  for (; i < n; ++i) {
    std::uint64_t t = a[i] - b[i];
    dst[i] = a[i] < b[i] ? t + m : t;
  }
}

void neg_mod_avx2(const std::uint64_t* a, std::uint64_t* dst, std::size_t n, std::uint64_t m) {
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i isz = _mm256_cmpeq_epi64(va, zero);
    __m256i t = _mm256_sub_epi64(vm, va);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(isz, t));
  }
  for (; i < n; ++i) dst[i] = a[i] == 0 ? 0 : m - a[i];
}

const Table avx2_impl{add_mod_avx2, sub_mod_avx2, neg_mod_avx2, "avx2"};

}  // namespace

const Table* avx2_table() {
  return __builtin_cpu_supports("avx2") ? &avx2_impl : nullptr;
}

}  // namespace zps::kernels
