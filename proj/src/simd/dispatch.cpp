#include <cstdlib>
#include <string>

#include "lrc/simd/monomial_kernels.hpp"

namespace lrc::simd {

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
#if defined(__x86_64__) || defined(_M_X64)
  out.push_back(&detail::sse2_kernels());
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) out.push_back(&detail::avx2_kernels());
#endif
#if defined(__aarch64__)
  out.push_back(&detail::neon_kernels());
#endif
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    auto all = available_kernels();
    if (const char* env = std::getenv("LRC_SIMD")) {
      for (auto* k : all)
        if (k->name == env) return k;
    }
    return all.back();
  }();
  return *chosen;
}

}  // namespace lrc::simd
