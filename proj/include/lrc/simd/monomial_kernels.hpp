#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lrc::simd {

// Packed exponent vector. Lane 0 holds the total degree, lanes 1..15 the
// exponents, so plain lexicographic byte order is graded-lex order.
struct alignas(16) Mono {
  std::array<std::uint8_t, 16> e{};
  friend bool operator==(const Mono&, const Mono&) = default;
};

inline constexpr int kMaxVars = 15;
inline constexpr std::uint8_t kMaxExponent = 254;

struct KernelTable {
  std::string_view name;
  // dst[k] = src[k] * m. Returns false if any lane reached 255 (overflow).
  bool (*mul_n)(const Mono* src, std::size_t n, const Mono& m, Mono* dst);
  // dst[k] = src[k] / m. Returns false if some src[k] is not divisible by m.
  bool (*div_n)(const Mono* src, std::size_t n, const Mono& m, Mono* dst);
  // Lexicographic byte comparison: <0, 0, >0.
  int (*compare)(const Mono& a, const Mono& b);
};

const KernelTable& scalar_kernels();
// Tables compiled into this binary and runnable on this CPU, scalar first.
std::vector<const KernelTable*> available_kernels();
// Selected once at first use: LRC_SIMD env override, else the widest available.
const KernelTable& active_kernels();

namespace detail {
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& sse2_kernels();
const KernelTable& avx2_kernels();
#endif
#if defined(__aarch64__)
const KernelTable& neon_kernels();
#endif
}  // namespace detail

}  // namespace lrc::simd
