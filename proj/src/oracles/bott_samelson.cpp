#include "lrc/oracles/bott_samelson.hpp"

#include <bit>

#include "lrc/error.hpp"

namespace lrc {

void BSClassVector::add(std::uint32_t K, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(K);
  if (it == coeffs.end()) {
    coeffs.emplace(K, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

BottSamelsonAlgebra::BottSamelsonAlgebra(const QuasiCartanMatrix& A, Word iota) : A_(A), iota_(std::move(iota)) {
  if (iota_.size() > 20) throw Error(ErrorKind::TooLarge, "Bott-Samelson algebra limited to 20 letters");
}

BSClassVector BottSamelsonAlgebra::basis(std::uint32_t K) const {
  BSClassVector v;
  v.m = int(iota_.size());
  v.add(K, MultiPoly::constant(A_.ring(), 1));
  return v;
}

const MultiPoly& BottSamelsonAlgebra::constant(std::uint32_t K, std::uint32_t K1, std::uint32_t K2) {
  std::uint64_t key = (std::uint64_t(K) << 40) ^ (std::uint64_t(K1) << 20) ^ K2;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  MultiPoly v(A_.ring());
  if ((K1 | K2) == ((K1 | K2) & K)) {
    auto& r = rec_[K];
    if (!r) r = std::make_unique<RelativeRecursion>(A_, DecoratedWord::positions(iota_, K));
    v = r->coefficient(DecoratedWord::positions(iota_, K1), DecoratedWord::positions(iota_, K2));
  }
  return cache_.emplace(key, std::move(v)).first->second;
}

BSClassVector BottSamelsonAlgebra::multiply(const BSClassVector& x, const BSClassVector& y) {
  const int m = int(iota_.size());
  if (x.m != m || y.m != m) throw Error(ErrorKind::SizeMismatch, "class vectors of a different length");
  BSClassVector out;
  out.m = m;
  const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
  for (const auto& [K1, c1] : x.coeffs)
    for (const auto& [K2, c2] : y.coeffs) {
      const std::uint32_t U = K1 | K2;
      const int budget = std::popcount(K1) + std::popcount(K2);
      // K runs over supersets of U with |K| <= |K1| + |K2|
      const std::uint32_t rest = full & ~U;
      for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
        std::uint32_t K = U | extra;
        if (std::popcount(K) <= budget) {
          const MultiPoly& p = constant(K, K1, K2);
          if (!p.is_zero()) out.add(K, c1 * c2 * p);
        }
        if (extra == 0) break;
      }
    }
  return out;
}

BSClassVector bs_multiply(const QuasiCartanMatrix& A, const Word& iota, const BSClassVector& x,
                          const BSClassVector& y) {
  BottSamelsonAlgebra alg(A, iota);
  return alg.multiply(x, y);
}

}  // namespace lrc
