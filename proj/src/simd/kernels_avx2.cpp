#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include "lrc/simd/monomial_kernels.hpp"

// Built with -mavx2 for this file only; reached only after a cpuid check.

namespace lrc::simd::detail {
namespace {

inline __m128i load(const Mono& m) { return _mm_load_si128(reinterpret_cast<const __m128i*>(m.e.data())); }
inline void store(Mono& m, __m128i v) { _mm_store_si128(reinterpret_cast<__m128i*>(m.e.data()), v); }

// two monomials per 256-bit register
bool mul_n_avx2(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  const __m256i mm = _mm256_broadcastsi128_si256(load(m));
  const __m256i full = _mm256_set1_epi8(char(0xFF));
  __m256i bad = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    s = _mm256_adds_epu8(s, mm);
    bad = _mm256_or_si256(bad, _mm256_cmpeq_epi8(s, full));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), s);
  }
  bool ok = _mm256_movemask_epi8(bad) == 0;
  if (k < n) {
    __m128i s = _mm_adds_epu8(load(src[k]), _mm256_castsi256_si128(mm));
    ok = ok && _mm_movemask_epi8(_mm_cmpeq_epi8(s, _mm256_castsi256_si128(full))) == 0;
    store(dst[k], s);
  }
  return ok;
}

bool div_n_avx2(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  const __m256i mm = _mm256_broadcastsi128_si256(load(m));
  __m256i good = _mm256_set1_epi8(char(0xFF));
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    good = _mm256_and_si256(good, _mm256_cmpeq_epi8(_mm256_min_epu8(s, mm), mm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_subs_epu8(s, mm));
  }
  bool ok = unsigned(_mm256_movemask_epi8(good)) == 0xFFFFFFFFu;
  if (k < n) {
    __m128i s = load(src[k]);
    __m128i m1 = _mm256_castsi256_si128(mm);
    ok = ok && _mm_movemask_epi8(_mm_cmpeq_epi8(_mm_min_epu8(s, m1), m1)) == 0xFFFF;
    store(dst[k], _mm_subs_epu8(s, m1));
  }
  return ok;
}

int compare_avx2(const Mono& a, const Mono& b) {
  unsigned diff = ~unsigned(_mm_movemask_epi8(_mm_cmpeq_epi8(load(a), load(b)))) & 0xFFFFu;
  if (diff == 0) return 0;
  int j = __builtin_ctz(diff);
  return a.e[j] < b.e[j] ? -1 : 1;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable t{"avx2", mul_n_avx2, div_n_avx2, compare_avx2};
  return t;
}

}  // namespace lrc::simd::detail
#endif
