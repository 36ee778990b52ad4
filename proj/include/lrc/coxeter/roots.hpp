#pragma once

#include <vector>

#include "lrc/coxeter/cartan.hpp"
#include "lrc/coxeter/word.hpp"

namespace lrc {

// Vector in V = span(alpha_i); coordinates are alpha-free polynomials.
struct RootVector {
  std::vector<MultiPoly> coords;

  static RootVector simple(const QuasiCartanMatrix& A, int i);
  static RootVector zero(const QuasiCartanMatrix& A);
  // sum_j coords_j * alpha_j
  MultiPoly as_linear_form(const Ring* r) const;
  bool operator==(const RootVector& o) const { return coords == o.coords; }
};

// <v, alpha_j^vee>, normalised so that <alpha_k, alpha_j^vee> = a_jk; this is
// the pairing for which s_j(v) = v - <v, alpha_j^vee> alpha_j reproduces
// s_j(alpha_k) = alpha_k - a_jk alpha_j.
MultiPoly pair(const QuasiCartanMatrix& A, const RootVector& v, int j);
RootVector simple_reflect(const QuasiCartanMatrix& A, int i, const RootVector& v);
// s_{i_1}( s_{i_2}( ... s_{i_m}(v) ) )
RootVector act(const QuasiCartanMatrix& A, const Word& word, const RootVector& v);

MultiPoly weyl_on_poly(const QuasiCartanMatrix& A, const Word& word, const MultiPoly& f);
MultiPoly simple_reflect_poly(const QuasiCartanMatrix& A, int i, const MultiPoly& f);
// x_i(f) = (s_i(f) - f) / alpha_i
MultiPoly demazure(const QuasiCartanMatrix& A, int i, const MultiPoly& f);

}  // namespace lrc
