#pragma once

#include "lrc/coxeter/group.hpp"

namespace lrc {

// Arc weights of the flow arrays. Relation uses b_kl = -a_{i_k i_l}, the
// coefficients of sigma_l^2 = sum_{k<l} b_kl sigma_k sigma_l; Reflected inserts
// s_{i_{k+1}} ... s_{i_{l-1}} before pairing.
enum class DuanWeights { Relation, Reflected };

// Non-equivariant c^w_{u,v} via triangular flow arrays; iota in R(w) with
// l(u) + l(v) = |iota|. Throws TooLarge when |iota| > cap.
MultiPoly duan_coefficient(const QuasiCartanMatrix& A, const CoxeterGroup& G, const Word& iota,
                           const GroupElement& u, const GroupElement& v, int cap = 8,
                           DuanWeights weights = DuanWeights::Relation);

// Localization xi_w(sigma_v) by the subword-product formula (an external
// formula, used as a consistency harness).
MultiPoly billey_localization(const QuasiCartanMatrix& A, const CoxeterGroup& G, const Word& iota,
                              const GroupElement& v);

}  // namespace lrc
