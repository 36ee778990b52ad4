#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lrc/closedform/bounded_map.hpp"
#include "lrc/coxeter/group.hpp"

namespace lrc {

enum class Filter { Admissible, All };

struct SummandTrace {
  PositionSet kprime = 0, kdoubleprime = 0;
  PositionSet L = 0;  // positions with a nonzero target
  BoundedMap phi;
  MultiPoly p;
  MultiPoly alpha_product;
  bool admissible = true;
  MultiPoly value() const { return p * alpha_product; }
};

struct SumOptions {
  Filter filter = Filter::Admissible;
  bool truncate = false;  // replace every scalar factor by max(factor, 0)
  int threads = 1;
  std::vector<SummandTrace>* traces = nullptr;
};

// Sum over bounded maps for fixed embeddings K', K'' of the base word.
class SummandEnumerator {
 public:
  SummandEnumerator(const QuasiCartanMatrix& A, const Word& iota, Filter filter, bool truncate = false);
  MultiPoly sum(PositionSet K1, PositionSet K2, std::vector<SummandTrace>* traces = nullptr,
                std::size_t* count = nullptr) const;

 private:
  struct State;
  void dfs(State& st, int idx) const;

  const QuasiCartanMatrix& A_;
  Word iota_;
  Filter filter_;
  bool truncate_;
};

// p^iota_{iota',iota''}; the admissible filter needs iota', iota'' admissible too
MultiPoly relative_coefficient(const QuasiCartanMatrix& A, const Word& iota, const Word& p, const Word& q,
                               const SumOptions& opt = {});
// Sum over explicit embedding lists.
MultiPoly sum_over_embeddings(const QuasiCartanMatrix& A, const Word& iota, const std::vector<PositionSet>& K1s,
                              const std::vector<PositionSet>& K2s, const SumOptions& opt,
                              std::size_t* count = nullptr);
// Every K with iota_K in R(x), lex order.
std::vector<PositionSet> reduced_embeddings(const CoxeterGroup& G, const Word& iota, const GroupElement& x);

// c^w_{u,v} (alpha-free; a number unless the matrix is symbolic)
MultiPoly lr_coefficient(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                         const GroupElement& v, const GroupElement& w, const Word& iota, const SumOptions& opt = {});
MultiPoly equivariant_lr(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                         const GroupElement& v, const GroupElement& w, const Word& iota, const SumOptions& opt = {});
std::size_t count_summands(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                           const GroupElement& v, const GroupElement& w, const Word& iota, Filter filter,
                           bool equivariant);

// p^{iota,K}_{K',K''}; never filtered
MultiPoly bs_coefficient(const QuasiCartanMatrix& A, const Word& iota, PositionSet K, PositionSet K1, PositionSet K2);

// c^{iota,+}_{u,v}
Scalar plus_truncation(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                       const GroupElement& v, const GroupElement& w, const Word& iota);
// c^{w,+}_{u,v} = min over R(w)
Scalar plus_truncation_min(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                           const GroupElement& v, const GroupElement& w);

// p^iota_{u,v}(t): equivariant sum with off-diagonal entries scaled by (1 + t)
MultiPoly deformed_p(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                     const GroupElement& v, const Word& iota, int threads = 1);

// Every (iota_{K'}, iota_{K''}) pair of subsequence words with its coefficient.
std::map<std::pair<Word, Word>, MultiPoly> all_relative_coefficients(const QuasiCartanMatrix& A, const Word& iota,
                                                                     Filter filter);

}  // namespace lrc
