#include "lrc/rank2/rank2.hpp"

#include "lrc/error.hpp"

namespace lrc {

Rank2Params Rank2Params::from_matrix(const QuasiCartanMatrix& A) {
  if (A.rank() != 2) throw Error(ErrorKind::SizeMismatch, "rank 2 matrix required");
  return {-A.a(1, 2), -A.a(2, 1), A.order(1, 2)};
}

Rank2Params Rank2Params::symbolic() {
  const Ring* r = Ring::get(NumberField::rationals(), 2);
  return {MultiPoly::variable(r, r->a_var()), MultiPoly::variable(r, r->b_var()), 0};
}

std::vector<MultiPoly> chebyshev_table(const Rank2Params& p, SeqKind kind, int k_max) {
  if (k_max < 0) throw Error(ErrorKind::IndexOutOfRange, "negative index");
  std::vector<MultiPoly> A{MultiPoly(p.ring()), MultiPoly::constant(p.ring(), 1)}, B = A;
  for (int k = 2; k <= k_max; ++k) {
    A.push_back(p.a * B[k - 1] - A[k - 2]);
    B.push_back(p.b * A[k - 1] - B[k - 2]);
  }
  auto& out = kind == SeqKind::A ? A : B;
  out.resize(k_max + 1);
  return out;
}

MultiPoly chebyshev_seq(const Rank2Params& p, SeqKind kind, int k) { return chebyshev_table(p, kind, k).back(); }

namespace {
MultiPoly binomial(const Rank2Params& p, SeqKind kind, int k, int m) {
  if (k < 0 || k > m) throw Error(ErrorKind::IndexOutOfRange, "binomial needs 0 <= k <= m");
  auto s = chebyshev_table(p, kind, m);
  MultiPoly num = MultiPoly::constant(p.ring(), 1), den = num;
  for (int j = 1; j <= m; ++j) num = num * s[j];
  for (int j = 1; j <= k; ++j) den = den * s[j];
  for (int j = 1; j <= m - k; ++j) den = den * s[j];
  return num.exact_div(den);
}

// c^{z}_{x, y} with x, y of the flavour of z (z of flavour `last`)
MultiPoly own(const Rank2Params& p, int last, int k, int m) {
  return last == 1 ? binomial(p, SeqKind::B, k, m) : binomial(p, SeqKind::A, k, m);
}
}  // namespace

MultiPoly binomial_C(const Rank2Params& p, int k, int m) { return binomial(p, SeqKind::A, k, m); }
MultiPoly binomial_D(const Rank2Params& p, int k, int m) { return binomial(p, SeqKind::B, k, m); }

Word DihedralElement::word() const {
  std::vector<int> v(length);
  for (int k = 0; k < length; ++k) v[length - 1 - k] = k % 2 == 0 ? last_letter() : 3 - last_letter();
  return Word(v);
}

bool DihedralElement::same_element(const DihedralElement& o, int order) const {
  if (length != o.length) return false;
  if (length == 0 || kind == o.kind) return true;
  return order != 0 && length == order;
}

DihedralElement DihedralElement::from_word(const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 1 && w[k] != 2) throw Error(ErrorKind::IndexOutOfRange, "dihedral letters are 1 and 2");
    if (k > 0 && w[k] == w[k - 1]) throw Error(ErrorKind::Parse, "word " + w.to_string() + " is not alternating");
  }
  if (w.empty()) return {};
  return {w.back() == 1 ? U : V, int(w.size())};
}

MultiPoly kitchloo_coefficient(const Rank2Params& p, const DihedralElement& x, const DihedralElement& y,
                               const DihedralElement& z) {
  const Ring* r = p.ring();
  const int M = z.length;
  if (x.length + y.length != M) return MultiPoly(r);
  if (p.order != 0 && (M > p.order || x.length > p.order || y.length > p.order)) return MultiPoly(r);
  if (x.is_identity()) return MultiPoly::constant(r, y.same_element(z, p.order) ? 1 : 0);
  if (y.is_identity()) return MultiPoly::constant(r, x.same_element(z, p.order) ? 1 : 0);
  const int f = z.last_letter();
  // at the longest element of a finite group both flavours name the same element
  auto is_own = [&](const DihedralElement& e) { return e.last_letter() == f || (p.order != 0 && e.length == p.order); };
  const bool ox = is_own(x), oy = is_own(y);
  if (ox && oy) return own(p, f, x.length, M);
  if (!ox && !oy) return MultiPoly(r);
  const int other_len = ox ? y.length : x.length;
  return own(p, 3 - f, other_len, M - 1);
}

}  // namespace lrc
