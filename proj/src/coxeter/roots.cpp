#include "lrc/coxeter/roots.hpp"

#include "lrc/error.hpp"

namespace lrc {

RootVector RootVector::zero(const QuasiCartanMatrix& A) {
  return RootVector{std::vector<MultiPoly>(A.rank(), MultiPoly(A.ring()))};
}

RootVector RootVector::simple(const QuasiCartanMatrix& A, int i) {
  RootVector v = zero(A);
  v.coords[i - 1] = MultiPoly::constant(A.ring(), 1);
  return v;
}

MultiPoly RootVector::as_linear_form(const Ring* r) const {
  MultiPoly f(r);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (!coords[j].is_zero()) f += coords[j] * MultiPoly::alpha(r, int(j) + 1);
  return f;
}

MultiPoly pair(const QuasiCartanMatrix& A, const RootVector& v, int j) {
  MultiPoly s(A.ring());
  for (int k = 1; k <= A.rank(); ++k) {
    const auto& c = v.coords[k - 1];
    if (c.is_zero() || A.a(j, k).is_zero()) continue;
    s += c * A.a(j, k);
  }
  return s;
}

RootVector simple_reflect(const QuasiCartanMatrix& A, int i, const RootVector& v) {
  if (i < 1 || i > A.rank()) throw Error(ErrorKind::IndexOutOfRange, "reflection index");
  RootVector out = v;
  out.coords[i - 1] -= pair(A, v, i);
  return out;
}

RootVector act(const QuasiCartanMatrix& A, const Word& word, const RootVector& v) {
  RootVector out = v;
  for (std::size_t k = word.size(); k-- > 0;) out = simple_reflect(A, word[k], out);
  return out;
}

MultiPoly simple_reflect_poly(const QuasiCartanMatrix& A, int i, const MultiPoly& f) {
  if (i < 1 || i > A.rank()) throw Error(ErrorKind::IndexOutOfRange, "reflection index");
  if (f.is_constant()) return f;
  return f.map_alphas(A.reflection_images(i));
}

MultiPoly weyl_on_poly(const QuasiCartanMatrix& A, const Word& word, const MultiPoly& f) {
  MultiPoly out = f;
  for (std::size_t k = word.size(); k-- > 0;) out = simple_reflect_poly(A, word[k], out);
  return out;
}

MultiPoly demazure(const QuasiCartanMatrix& A, int i, const MultiPoly& f) {
  if (f.alpha_free()) return MultiPoly(A.ring());
  return (simple_reflect_poly(A, i, f) - f).exact_div_linear(i);
}

}  // namespace lrc
