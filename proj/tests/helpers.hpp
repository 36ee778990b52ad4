#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lrc/closedform/coefficients.hpp"
#include "lrc/coxeter/roots.hpp"
#include "lrc/oracles/recursion.hpp"

namespace lrc::test {

// alternating word of length m ending in `last`
inline Word alt(int m, int last) {
  std::vector<int> v(m);
  for (int k = 0; k < m; ++k) v[m - 1 - k] = k % 2 == 0 ? last : 3 - last;
  return Word(v);
}

// all admissible words of length n over 1..rank
inline std::vector<Word> admissible_words(int rank, int n) {
  std::vector<Word> layer{Word()};
  for (int k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (auto& w : layer)
      for (int i = 1; i <= rank; ++i)
        if (w.empty() || w.back() != i) next.push_back(w + Word{i});
    layer = std::move(next);
  }
  return layer;
}

// p^iota_{u,v} folded from the word recursion over R(u) x R(v)
inline MultiPoly folded_recursion(const QuasiCartanMatrix& A, const CoxeterGroup& G, const Word& iota,
                                  const GroupElement& u, const GroupElement& v) {
  RelativeRecursion R(A, DecoratedWord::plain(iota));
  MultiPoly s(A.ring());
  for (auto& p : G.reduced_words(u))
    for (auto& q : G.reduced_words(v)) s += R.coefficient(DecoratedWord::plain(p), DecoratedWord::plain(q));
  return s;
}

// product sigma_u sigma_v restricted to length l(u) + l(v), keyed by canonical label
inline std::map<std::string, MultiPoly> product_row(const QuasiCartanMatrix& A, const CoxeterGroup& G,
                                                    const GroupElement& u, const GroupElement& v,
                                                    const std::vector<GroupElement>& elems) {
  std::map<std::string, MultiPoly> out;
  for (auto& w : elems) {
    if (w.length() != u.length() + v.length()) continue;
    auto c = lr_coefficient(A, G, u, v, w, w.canonical);
    if (!c.is_zero()) out[w.canonical.label()] = c;
  }
  return out;
}

inline std::vector<std::string> trace_values(const std::vector<SummandTrace>& ts) {
  std::vector<std::string> out;
  for (auto& t : ts) out.push_back(t.value().to_string());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace lrc::test
