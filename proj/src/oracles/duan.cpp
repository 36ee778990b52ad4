#include "lrc/oracles/duan.hpp"

#include <bit>
#include <functional>

#include "lrc/coxeter/roots.hpp"
#include "lrc/error.hpp"

namespace lrc {

namespace {

std::vector<std::uint32_t> embeddings_of(const CoxeterGroup& G, const Word& iota, const GroupElement& x) {
  std::vector<std::uint32_t> out;
  for (const auto& r : G.reduced_words(x))
    for (auto K : subword_masks(iota, r)) out.push_back(K);
  return out;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

MultiPoly duan_coefficient(const QuasiCartanMatrix& A, const CoxeterGroup& G, const Word& iota,
                           const GroupElement& u, const GroupElement& v, int cap, DuanWeights weights) {
  const int m = int(iota.size());
  if (m > cap) throw Error(ErrorKind::TooLarge, "Duan enumeration capped at length " + std::to_string(cap));
  const Ring* R = A.ring();
  if (u.length() + v.length() != std::size_t(m)) return MultiPoly(R);
  if (!G.is_reduced(iota)) throw Error(ErrorKind::NotReducedFor, "Duan formula needs a reduced word");
  if (m == 0) return MultiPoly::constant(R, 1);

  // b[k][l] = < (-alpha_{i_l}), alpha_{i_k}^vee >, or with s_{i_{k+1}} ... s_{i_{l-1}} applied first
  std::vector<std::vector<MultiPoly>> b(m, std::vector<MultiPoly>(m));
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < l; ++k) {
      RootVector x = RootVector::simple(A, iota[l]);
      if (weights == DuanWeights::Reflected) x = act(A, iota.substr(k + 1, l - k - 1), x);
      b[k][l] = -pair(A, x, iota[k]);
    }

  MultiPoly total(R);
  std::vector<int> d(m), in(m), budget(m);
  std::vector<std::vector<MultiPoly>> bpow(m * m);
  auto power = [&](int k, int l, int e) -> const MultiPoly& {
    auto& pw = bpow[k * m + l];
    if (pw.empty()) pw.push_back(MultiPoly::constant(R, 1));
    while (int(pw.size()) <= e) pw.push_back(pw.back() * b[k][l]);
    return pw[e];
  };

  // column l, filling rows k = 0..l-1
  std::function<void(int, int, int, Rational, MultiPoly)> fill = [&](int l, int k, int colsum, Rational denom,
                                                                    MultiPoly w) {
    if (k == l) {
      int out = colsum - d[l];
      if (out < 0) return;
      in[l] = colsum;
      budget[l] = out;
      MultiPoly ww = w * Scalar(factorial(colsum) / denom);
      if (l + 1 == m) {
        bool done = budget[l] == 0;
        for (int j = 0; j < l && done; ++j) done = budget[j] == 0;
        if (done) total += ww;
        return;
      }
      fill(l + 1, 0, 0, Rational(1), std::move(ww));
      return;
    }
    for (int c = 0; c <= budget[k]; ++c) {
      budget[k] -= c;
      if (c == 0)
        fill(l, k + 1, colsum, denom, w);
      else if (!b[k][l].is_zero())
        fill(l, k + 1, colsum + c, denom * factorial(c), w * power(k, l, c));
      budget[k] += c;
    }
  };

  for (auto K1 : embeddings_of(G, iota, u))
    for (auto K2 : embeddings_of(G, iota, v)) {
      for (int k = 0; k < m; ++k) {
        bool a = K1 >> k & 1u, c = K2 >> k & 1u;
        d[k] = (a && c) ? 1 : (!a && !c) ? -1 : 0;
      }
      fill(0, 0, 0, Rational(1), MultiPoly::constant(R, 1));
    }
  return total;
}

MultiPoly billey_localization(const QuasiCartanMatrix& A, const CoxeterGroup& G, const Word& iota,
                              const GroupElement& v) {
  if (!G.is_reduced(iota)) throw Error(ErrorKind::NotReducedFor, "localization needs a reduced word");
  const Ring* R = A.ring();
  const int m = int(iota.size());
  std::vector<MultiPoly> beta;
  for (int j = 0; j < m; ++j)
    beta.push_back(act(A, iota.substr(0, j), RootVector::simple(A, iota[j])).as_linear_form(R));
  MultiPoly total(R);
  for (auto J : embeddings_of(G, iota, v)) {
    MultiPoly p = MultiPoly::constant(R, 1);
    for (int j = 0; j < m; ++j)
      if (J >> j & 1u) p *= beta[j];
    total += p;
  }
  return total;
}

}  // namespace lrc
