#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lrc/coxeter/cartan.hpp"
#include "lrc/coxeter/word.hpp"

namespace lrc {

using PositionSet = std::uint32_t;  // bit k <-> position k+1

std::vector<int> positions_of(PositionSet s);
PositionSet position_set(const std::vector<int>& positions);
std::string positions_to_string(PositionSet s);  // "{1,3,5}"
// lexicographic order of the sorted position lists
bool position_set_less(PositionSet a, PositionSet b);

// phi : domain -> {0} u ([m] \ M), phi(l) < l, every k outside M hit once.
struct BoundedMap {
  int m = 0;
  PositionSet domain = 0;
  PositionSet M = 0;
  std::array<std::uint8_t, 32> target{};  // target[l-1]; 0 is the sink

  int operator()(int l) const { return target[l - 1]; }
  PositionSet nonzero_domain() const;
  bool well_formed() const;
  std::string to_string() const;  // "3->2, 4->0"
  friend bool operator==(const BoundedMap&, const BoundedMap&) = default;
};

// All bounded maps on L with |L| + |M| >= m, lex in the target tuple (0
// first). allow_zero = false restricts to bounded bijections.
std::vector<BoundedMap> enumerate_bounded_maps(PositionSet L, PositionSet M, int m, bool allow_zero = true);

bool is_admissible_subset(const Word& iota, PositionSet S);
// For every l in the domain, iota restricted to M u (phi(L_{<l}) \ {0}) is admissible.
bool is_iota_admissible(const Word& iota, const BoundedMap& phi);

struct PhiValue {
  MultiPoly p;              // product of the scalar factors
  MultiPoly alpha_product;  // product of the degree-one factors
};
PhiValue p_phi(const QuasiCartanMatrix& A, const Word& iota, const BoundedMap& phi);

}  // namespace lrc
