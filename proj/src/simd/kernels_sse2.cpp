#if defined(__x86_64__) || defined(_M_X64)
#include <emmintrin.h>

#include "lrc/simd/monomial_kernels.hpp"

namespace lrc::simd::detail {
namespace {

inline __m128i load(const Mono& m) { return _mm_load_si128(reinterpret_cast<const __m128i*>(m.e.data())); }
inline void store(Mono& m, __m128i v) { _mm_store_si128(reinterpret_cast<__m128i*>(m.e.data()), v); }

bool mul_n_sse2(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  const __m128i mm = load(m);
  const __m128i full = _mm_set1_epi8(char(0xFF));
  __m128i bad = _mm_setzero_si128();
  for (std::size_t k = 0; k < n; ++k) {
    __m128i s = _mm_adds_epu8(load(src[k]), mm);
    bad = _mm_or_si128(bad, _mm_cmpeq_epi8(s, full));
    store(dst[k], s);
  }
  return _mm_movemask_epi8(bad) == 0;
}

bool div_n_sse2(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  const __m128i mm = load(m);
  __m128i good = _mm_set1_epi8(char(0xFF));
  for (std::size_t k = 0; k < n; ++k) {
    __m128i s = load(src[k]);
    good = _mm_and_si128(good, _mm_cmpeq_epi8(_mm_min_epu8(s, mm), mm));
    store(dst[k], _mm_subs_epu8(s, mm));
  }
  return _mm_movemask_epi8(good) == 0xFFFF;
}

int compare_sse2(const Mono& a, const Mono& b) {
  unsigned diff = ~unsigned(_mm_movemask_epi8(_mm_cmpeq_epi8(load(a), load(b)))) & 0xFFFFu;
  if (diff == 0) return 0;
  int j = __builtin_ctz(diff);
  return a.e[j] < b.e[j] ? -1 : 1;
}

}  // namespace

const KernelTable& sse2_kernels() {
  static const KernelTable t{"sse2", mul_n_sse2, div_n_sse2, compare_sse2};
  return t;
}

}  // namespace lrc::simd::detail
#endif
