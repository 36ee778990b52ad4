#include "lrc/closedform/coefficients.hpp"

#include <algorithm>
#include <bit>

#include "lrc/coxeter/roots.hpp"
#include "lrc/error.hpp"
#include "lrc/parallel.hpp"

namespace lrc {

struct SummandEnumerator::State {
  PositionSet K1, K2, M;
  std::vector<int> dom;
  PositionSet S, free;
  int zeros;
  BoundedMap phi;
  MultiPoly p, alpha;
  bool admissible;
  MultiPoly total;
  std::vector<SummandTrace>* traces;
  std::size_t* count;
};

SummandEnumerator::SummandEnumerator(const QuasiCartanMatrix& A, const Word& iota, Filter filter, bool truncate)
    : A_(A), iota_(iota), filter_(filter), truncate_(truncate) {
  if (iota.size() > 32) throw Error(ErrorKind::TooLarge, "words longer than 32 letters");
  if (filter == Filter::Admissible && !is_admissible_seq(iota))
    throw Error(ErrorKind::NonAdmissibleBase, "base word " + iota.to_string() + " has adjacent equal letters");
}

MultiPoly SummandEnumerator::sum(PositionSet K1, PositionSet K2, std::vector<SummandTrace>* traces,
                                 std::size_t* count) const {
  const int m = int(iota_.size());
  const PositionSet full = m == 32 ? ~0u : (1u << m) - 1;
  State st;
  st.K1 = K1;
  st.K2 = K2;
  st.M = K1 | K2;
  st.dom = positions_of(K1 & K2);
  st.S = st.M;
  st.free = full & ~st.M;
  st.zeros = int(st.dom.size()) - std::popcount(st.free);
  st.total = MultiPoly(A_.ring());
  if (st.zeros < 0) return st.total;
  st.phi.m = m;
  st.phi.domain = K1 & K2;
  st.phi.M = st.M;
  st.p = MultiPoly::constant(A_.ring(), 1);
  st.alpha = st.p;
  st.admissible = true;
  st.traces = traces;
  st.count = count;
  dfs(st, 0);
  return st.total;
}

void SummandEnumerator::dfs(State& st, int idx) const {
  if (idx == int(st.dom.size())) {
    if (st.free != 0) return;
    if (st.count) ++*st.count;
    MultiPoly v = st.p * st.alpha;
    if (st.traces)
      st.traces->push_back({st.K1, st.K2, st.phi.nonzero_domain(), st.phi, st.p, st.alpha, st.admissible});
    st.total += v;
    return;
  }
  const int l = st.dom[idx];
  const int remaining = int(st.dom.size()) - idx;
  if (std::popcount(st.free) > remaining) return;
  if (st.free && 32 - std::countl_zero(st.free) >= st.dom.back()) return;  // some free k has no later preimage

  const bool saved_adm = st.admissible;
  if (!is_admissible_subset(iota_, st.S)) {
    if (filter_ == Filter::Admissible) return;
    st.admissible = false;
  }
  const bool prune_zero = !st.traces && !st.count;

  auto visit = [&](int t) {
    RootVector v = RootVector::simple(A_, iota_[l - 1]);
    for (int r = l - 1; r > t; --r)
      if (st.S >> (r - 1) & 1u) v = simple_reflect(A_, iota_[r - 1], v);
    st.phi.target[l - 1] = std::uint8_t(t);
    if (t) {
      MultiPoly f = -pair(A_, v, iota_[t - 1]);
      if (truncate_ && f.as_scalar().sign() < 0) f = MultiPoly(A_.ring());
      if (f.is_zero() && prune_zero) return;
      MultiPoly saved = st.p;
      st.p = st.p * f;
      const PositionSet bit = 1u << (t - 1);
      st.S |= bit;
      st.free &= ~bit;
      dfs(st, idx + 1);
      st.S &= ~bit;
      st.free |= bit;
      st.p = std::move(saved);
    } else {
      MultiPoly saved = st.alpha;
      st.alpha = st.alpha * v.as_linear_form(A_.ring());
      --st.zeros;
      dfs(st, idx + 1);
      ++st.zeros;
      st.alpha = std::move(saved);
    }
    st.phi.target[l - 1] = 0;
  };

  if (st.zeros > 0) visit(0);
  for (int k = 1; k < l; ++k)
    if (st.free >> (k - 1) & 1u) visit(k);
  st.admissible = saved_adm;
}

MultiPoly sum_over_embeddings(const QuasiCartanMatrix& A, const Word& iota, const std::vector<PositionSet>& K1s,
                              const std::vector<PositionSet>& K2s, const SumOptions& opt, std::size_t* count) {
  SummandEnumerator en(A, iota, opt.filter, opt.truncate);
  const std::size_t n = K1s.size() * K2s.size();
  std::vector<MultiPoly> part(n);
  std::vector<std::vector<SummandTrace>> traces(opt.traces ? n : 0);
  std::vector<std::size_t> counts(n, 0);
  parallel_for(n, opt.threads, [&](std::size_t k) {
    part[k] = en.sum(K1s[k / K2s.size()], K2s[k % K2s.size()], opt.traces ? &traces[k] : nullptr,
                     count ? &counts[k] : nullptr);
  });
  MultiPoly total(A.ring());
  for (std::size_t k = 0; k < n; ++k) {
    total += part[k];
    if (count) *count += counts[k];
    if (opt.traces) opt.traces->insert(opt.traces->end(), traces[k].begin(), traces[k].end());
  }
  return total;
}

MultiPoly relative_coefficient(const QuasiCartanMatrix& A, const Word& iota, const Word& p, const Word& q,
                               const SumOptions& opt) {
  return sum_over_embeddings(A, iota, subword_masks(iota, p), subword_masks(iota, q), opt);
}

std::vector<PositionSet> reduced_embeddings(const CoxeterGroup& G, const Word& iota, const GroupElement& x) {
  std::vector<PositionSet> out;
  for (const auto& r : G.reduced_words(x))
    for (auto K : subword_masks(iota, r)) out.push_back(K);
  std::sort(out.begin(), out.end(), position_set_less);
  return out;
}

namespace {
void require_reduced_for(const CoxeterGroup& G, const Word& iota, const GroupElement& w) {
  if (!G.in_reduced_words(iota, w))
    throw Error(ErrorKind::NotReducedFor, iota.to_string() + " is not a reduced word for " +
                                              (w.canonical.empty() ? std::string("e") : w.canonical.to_string()));
}
}  // namespace

MultiPoly equivariant_lr(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                         const GroupElement& v, const GroupElement& w, const Word& iota, const SumOptions& opt) {
  require_reduced_for(G, iota, w);
  if (u.length() + v.length() < w.length()) return MultiPoly(A.ring());
  return sum_over_embeddings(A, iota, reduced_embeddings(G, iota, u), reduced_embeddings(G, iota, v), opt);
}

MultiPoly lr_coefficient(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                         const GroupElement& v, const GroupElement& w, const Word& iota, const SumOptions& opt) {
  require_reduced_for(G, iota, w);
  if (u.length() + v.length() != w.length()) return MultiPoly(A.ring());
  return sum_over_embeddings(A, iota, reduced_embeddings(G, iota, u), reduced_embeddings(G, iota, v), opt);
}

std::size_t count_summands(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                           const GroupElement& v, const GroupElement& w, const Word& iota, Filter filter,
                           bool equivariant) {
  require_reduced_for(G, iota, w);
  if (u.length() + v.length() < w.length()) return 0;
  if (!equivariant && u.length() + v.length() != w.length()) return 0;
  std::size_t n = 0;
  SumOptions opt;
  opt.filter = filter;
  sum_over_embeddings(A, iota, reduced_embeddings(G, iota, u), reduced_embeddings(G, iota, v), opt, &n);
  return n;
}

MultiPoly bs_coefficient(const QuasiCartanMatrix& A, const Word& iota, PositionSet K, PositionSet K1,
                         PositionSet K2) {
  if (((K1 | K2) & ~K) != 0) throw Error(ErrorKind::NotNested, "K' and K'' must lie inside K");
  if (std::popcount(K) > std::popcount(K1) + std::popcount(K2)) return MultiPoly(A.ring());
  // re-index onto iota_K
  Word sub = iota.select(K);
  PositionSet a = 0, b = 0;
  int j = 0;
  for (int k = 0; k < 32; ++k)
    if (K >> k & 1u) {
      if (K1 >> k & 1u) a |= 1u << j;
      if (K2 >> k & 1u) b |= 1u << j;
      ++j;
    }
  SummandEnumerator en(A, sub, Filter::All);
  return en.sum(a, b);
}

Scalar plus_truncation(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                       const GroupElement& v, const GroupElement& w, const Word& iota) {
  require_reduced_for(G, iota, w);
  if (u.length() + v.length() != w.length())
    throw Error(ErrorKind::SizeMismatch, "plus truncation needs l(u) + l(v) = l(w)");
  SumOptions opt;
  opt.truncate = true;
  return sum_over_embeddings(A, iota, reduced_embeddings(G, iota, u), reduced_embeddings(G, iota, v), opt)
      .as_scalar();
}

Scalar plus_truncation_min(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                           const GroupElement& v, const GroupElement& w) {
  bool first = true;
  Scalar best;
  for (const auto& iota : G.reduced_words(w)) {
    Scalar c = plus_truncation(A, G, u, v, w, iota);
    if (first || (c - best).sign() < 0) best = c;
    first = false;
  }
  return best;
}

MultiPoly deformed_p(const QuasiCartanMatrix& A, const CoxeterGroup& G, const GroupElement& u,
                     const GroupElement& v, const Word& iota, int threads) {
  GroupElement w = G.normal_form(iota);
  if (w.length() != iota.size()) throw Error(ErrorKind::NotReducedFor, iota.to_string() + " is not reduced");
  QuasiCartanMatrix At = A.deformed();
  SumOptions opt;
  opt.threads = threads;
  return equivariant_lr(At, G, u, v, w, iota, opt);
}

std::map<std::pair<Word, Word>, MultiPoly> all_relative_coefficients(const QuasiCartanMatrix& A, const Word& iota,
                                                                     Filter filter) {
  const int m = int(iota.size());
  if (m > 20) throw Error(ErrorKind::TooLarge, "exhaustive sweep limited to 20 letters");
  SummandEnumerator en(A, iota, filter);
  std::map<std::pair<Word, Word>, MultiPoly> out;
  const PositionSet n = 1u << m;
  for (PositionSet K1 = 0; K1 < n; ++K1)
    for (PositionSet K2 = 0; K2 < n; ++K2) {
      auto key = std::make_pair(iota.select(K1), iota.select(K2));
      auto it = out.try_emplace(std::move(key), A.ring()).first;
      if (std::popcount(K1) + std::popcount(K2) < m) continue;
      it->second += en.sum(K1, K2);
    }
  return out;
}

}  // namespace lrc
