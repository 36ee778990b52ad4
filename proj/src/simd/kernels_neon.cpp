#if defined(__aarch64__)
#include <arm_neon.h>

#include "lrc/simd/monomial_kernels.hpp"

namespace lrc::simd::detail {
namespace {

inline uint8x16_t load(const Mono& m) { return vld1q_u8(m.e.data()); }

bool mul_n_neon(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  const uint8x16_t mm = load(m);
  uint8x16_t hi = vdupq_n_u8(0);
  for (std::size_t k = 0; k < n; ++k) {
    uint8x16_t s = vqaddq_u8(load(src[k]), mm);
    hi = vmaxq_u8(hi, s);
    vst1q_u8(dst[k].e.data(), s);
  }
  return vmaxvq_u8(hi) != 0xFF;
}

bool div_n_neon(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  const uint8x16_t mm = load(m);
  uint8x16_t good = vdupq_n_u8(0xFF);
  for (std::size_t k = 0; k < n; ++k) {
    uint8x16_t s = load(src[k]);
    good = vandq_u8(good, vcgeq_u8(s, mm));
    vst1q_u8(dst[k].e.data(), vqsubq_u8(s, mm));
  }
  return vminvq_u8(good) == 0xFF;
}

int compare_neon(const Mono& a, const Mono& b) {
  if (vminvq_u8(vceqq_u8(load(a), load(b))) == 0xFF) return 0;
  for (int j = 0; j < 16; ++j)
    if (a.e[j] != b.e[j]) return a.e[j] < b.e[j] ? -1 : 1;
  return 0;
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable t{"neon", mul_n_neon, div_n_neon, compare_neon};
  return t;
}

}  // namespace lrc::simd::detail
#endif
