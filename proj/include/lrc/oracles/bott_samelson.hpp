#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>

#include "lrc/oracles/recursion.hpp"

namespace lrc {

// Element of the Bott-Samelson algebra of iota in the basis sigma_K.
struct BSClassVector {
  int m = 0;
  std::map<std::uint32_t, MultiPoly> coeffs;  // no zero entries
  void add(std::uint32_t K, const MultiPoly& c);
  friend bool operator==(const BSClassVector&, const BSClassVector&) = default;
};

// Structure constants p^{iota,K}_{K',K''} from the recursion on
// position-decorated words; cached. Not thread safe.
class BottSamelsonAlgebra {
 public:
  BottSamelsonAlgebra(const QuasiCartanMatrix& A, Word iota);
  const Word& iota() const { return iota_; }
  const MultiPoly& constant(std::uint32_t K, std::uint32_t K1, std::uint32_t K2);
  BSClassVector multiply(const BSClassVector& x, const BSClassVector& y);
  BSClassVector basis(std::uint32_t K) const;

 private:
  const QuasiCartanMatrix& A_;
  Word iota_;
  std::unordered_map<std::uint64_t, MultiPoly> cache_;
  std::unordered_map<std::uint32_t, std::unique_ptr<RelativeRecursion>> rec_;
};

BSClassVector bs_multiply(const QuasiCartanMatrix& A, const Word& iota, const BSClassVector& x,
                          const BSClassVector& y);

}  // namespace lrc
