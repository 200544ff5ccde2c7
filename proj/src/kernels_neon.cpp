// NEON backend for the additive entrywise kernels. Only built on aarch64,
// where NEON is architecturally guaranteed.

#include "zps/kernels.hpp"

#include <arm_neon.h>

namespace zps::kernels {

namespace {

void add_mod_neon(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                  std::size_t n, std::uint64_t m) {
  const uint64x2_t vm = vdupq_n_u64(m);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t t = vaddq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    uint64x2_t ge = vcgeq_u64(t, vm);
    vst1q_u64(dst + i, vsubq_u64(t, vandq_u64(ge, vm)));
  }
  for (; i < n; ++i) {
    std::uint64_t t = a[i] + b[i];
    dst[i] = t >= m ? t - m : t;
  }
}

void sub_mod_neon(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                  std::size_t n, std::uint64_t m) {
  const uint64x2_t vm = vdupq_n_u64(m);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t va = vld1q_u64(a + i);
    uint64x2_t vb = vld1q_u64(b + i);
    uint64x2_t t = vsubq_u64(va, vb);
    uint64x2_t borrow = vcltq_u64(va, vb);
    vst1q_u64(dst + i, vaddq_u64(t, vandq_u64(borrow, vm)));
  }
  for (; i < n; ++i) {
    std::uint64_t t = a[i] - b[i];
    dst[i] = a[i] < b[i] ? t + m : t;
  }
}

void neg_mod_neon(const std::uint64_t* a, std::uint64_t* dst, std::size_t n, std::uint64_t m) {
  const uint64x2_t vm = vdupq_n_u64(m);
  const uint64x2_t zero = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t va = vld1q_u64(a + i);
    uint64x2_t nz = vceqq_u64(va, zero);
    vst1q_u64(dst + i, vbicq_u64(vsubq_u64(vm, va), nz));
  }
  for (; i < n; ++i) dst[i] = a[i] == 0 ? 0 : m - a[i];
}

const Table neon_impl{add_mod_neon, sub_mod_neon, neg_mod_neon, "neon"};

}  // namespace

const Table* neon_table() { return &neon_impl; }

}  // namespace zps::kernels
