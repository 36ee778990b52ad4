#pragma once

#include <vector>

#include "lrc/coxeter/cartan.hpp"
#include "lrc/coxeter/word.hpp"

namespace lrc {

// Matrix [[2, -a], [-b, 2]]; a, b may be the symbols of the ring or numbers.
struct Rank2Params {
  MultiPoly a, b;
  int order = 0;  // n_12, 0 = infinite

  static Rank2Params from_matrix(const QuasiCartanMatrix& A);
  static Rank2Params symbolic();
  const Ring* ring() const { return a.ring(); }
};

enum class SeqKind { A, B };

// A_k = a B_{k-1} - A_{k-2}, B_k = b A_{k-1} - B_{k-2}, A_0 = B_0 = 0, A_1 = B_1 = 1
MultiPoly chebyshev_seq(const Rank2Params& p, SeqKind kind, int k);
std::vector<MultiPoly> chebyshev_table(const Rank2Params& p, SeqKind kind, int k_max);

MultiPoly binomial_C(const Rank2Params& p, int k, int m);
MultiPoly binomial_D(const Rank2Params& p, int k, int m);

// u_m = ...s_1 s_2 s_1 and v_m = ...s_2 s_1 s_2 (m letters)
struct DihedralElement {
  enum Kind { U, V } kind = U;
  int length = 0;

  Word word() const;
  int last_letter() const { return kind == U ? 1 : 2; }
  bool is_identity() const { return length == 0; }
  bool same_element(const DihedralElement& o, int order) const;
  static DihedralElement from_word(const Word& w);  // w must be alternating
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

// c^z_{x,y} by the binomial case table
MultiPoly kitchloo_coefficient(const Rank2Params& p, const DihedralElement& x, const DihedralElement& y,
                               const DihedralElement& z);

}  // namespace lrc
