#include "lrc/simd/monomial_kernels.hpp"

namespace lrc::simd {
namespace {

bool mul_n_ref(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  bool ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (int j = 0; j < 16; ++j) {
      unsigned s = unsigned(src[k].e[j]) + m.e[j];
      if (s >= 255) {
        s = 255;
        ok = false;
      }
      dst[k].e[j] = std::uint8_t(s);
    }
  }
  return ok;
}

bool div_n_ref(const Mono* src, std::size_t n, const Mono& m, Mono* dst) {
  bool ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (int j = 0; j < 16; ++j) {
      if (src[k].e[j] < m.e[j]) {
        ok = false;
        dst[k].e[j] = 0;
      } else {
        dst[k].e[j] = std::uint8_t(src[k].e[j] - m.e[j]);
      }
    }
  }
  return ok;
}

int compare_ref(const Mono& a, const Mono& b) {
  for (int j = 0; j < 16; ++j)
    if (a.e[j] != b.e[j]) return a.e[j] < b.e[j] ? -1 : 1;
  return 0;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable t{"scalar", mul_n_ref, div_n_ref, compare_ref};
  return t;
}

}  // namespace lrc::simd
