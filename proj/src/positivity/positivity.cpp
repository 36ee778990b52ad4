#include "lrc/positivity/positivity.hpp"

#include "lrc/closedform/coefficients.hpp"
#include "lrc/coxeter/roots.hpp"
#include "lrc/error.hpp"
#include "lrc/parallel.hpp"

namespace lrc {

std::string to_string(HypothesisClass h) {
  switch (h) {
    case HypothesisClass::ProductAtLeast4: return "aa>=4";
    case HypothesisClass::DiscreteTable: return "discrete-table";
    case HypothesisClass::Other: return "other";
  }
  return "other";
}

namespace {
bool special_pair(const QuasiCartanMatrix& A, int i, int j) {
  if (!A.a(i, j).is_constant() || !A.a(j, i).is_constant()) return false;
  Scalar aij = A.a(i, j).as_scalar(), aji = A.a(j, i).as_scalar();
  return aij.sign() < 0 && (aij * aji - Scalar::from_int(4)).sign() >= 0;
}

bool special(const QuasiCartanMatrix& A) {
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = 1; j <= A.rank(); ++j)
      if (i != j && !special_pair(A, i, j)) return false;
  return true;
}
}  // namespace

HypothesisClass hypothesis_class(const QuasiCartanMatrix& A) {
  if (!A.numeric()) return HypothesisClass::Other;
  if (special(A)) return HypothesisClass::ProductAtLeast4;
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = 1; j <= A.rank(); ++j) {
      if (i == j) continue;
      Scalar aij = A.a(i, j).as_scalar(), p = aij * A.a(j, i).as_scalar();
      if (aij.sign() > 0) return HypothesisClass::Other;
      if ((p - Scalar::from_int(4)).sign() >= 0) continue;
      const int n = A.order(i, j);
      if (n == 0 || !compatible_product(p, n)) return HypothesisClass::Other;
    }
  return HypothesisClass::DiscreteTable;
}

RootPositivity root_positivity_check(const QuasiCartanMatrix& A, const Word& iota) {
  if (!special(A)) throw Error(ErrorKind::HypothesisNotMet, "needs a_ij < 0 and a_ij a_ji >= 4 for all i != j");
  if (iota.size() < 2) throw Error(ErrorKind::SizeMismatch, "needs at least two letters");
  if (!is_admissible_seq(iota)) throw Error(ErrorKind::NonAdmissibleBase, iota.to_string() + " is not admissible");
  const Word w = iota.substr(1, iota.size() - 2);
  RootVector r = act(A, w, RootVector::simple(A, iota.back()));
  RootPositivity out;
  for (std::size_t k = 0; k < r.coords.size(); ++k)
    if (r.coords[k].as_scalar().sign() < 0) {
      out.ok = false;
      out.witness = "coefficient of a" + std::to_string(k + 1) + " is " + r.coords[k].to_string();
      return out;
    }
  MultiPoly p = pair(A, r, iota[0]);
  if (p.as_scalar().sign() > 0) {
    out.ok = false;
    out.witness = "pairing with a" + std::to_string(iota[0]) + " is " + p.to_string();
  }
  return out;
}

namespace {
struct Triple {
  GroupElement u, v, w;
};

// (u, v, w) with l(w) <= max_len, l(u) + l(v) >= l(w) and u, v below w
std::vector<Triple> triples(const CoxeterGroup& G, int max_len) {
  auto elems = G.elements_up_to(max_len);
  std::vector<Triple> out;
  for (const auto& w : elems) {
    const Word& iota = w.canonical;
    std::vector<GroupElement> below;
    for (const auto& x : elems)
      if (x.length() <= w.length() && !reduced_embeddings(G, iota, x).empty()) below.push_back(x);
    for (const auto& u : below)
      for (const auto& v : below)
        if (u.length() + v.length() >= w.length()) out.push_back({u, v, w});
  }
  return out;
}

AuditReport start(const char* kind, const QuasiCartanMatrix& A) {
  AuditReport r;
  r.kind = kind;
  r.matrix_id = A.id();
  r.hypothesis = hypothesis_class(A);
  if (r.hypothesis == HypothesisClass::Other) r.notes.push_back("matrix is outside both nonnegativity regimes");
  return r;
}

template <class F>
void run(AuditReport& rep, std::size_t n, int threads, F check) {
  std::vector<std::vector<Violation>> found(n);
  parallel_for(n, threads, [&](std::size_t k) { found[k] = check(k); });
  for (auto& f : found)
    for (auto& v : f) rep.violations.push_back(std::move(v));
}
}  // namespace

AuditReport nonneg_audit(const QuasiCartanMatrix& A, int max_len, int threads) {
  AuditReport rep = start("nonneg", A);
  rep.proven = rep.hypothesis == HypothesisClass::ProductAtLeast4;
  CoxeterGroup G(A);
  auto ts = triples(G, max_len);
  rep.cases = ts.size();
  run(rep, ts.size(), threads, [&](std::size_t k) {
    const auto& t = ts[k];
    std::vector<Violation> out;
    MultiPoly p = equivariant_lr(A, G, t.u, t.v, t.w, t.w.canonical);
    if (!p.coefficientwise_nonneg()) out.push_back({t.u.canonical, t.v.canonical, t.w.canonical, t.w.canonical, p.to_string()});
    return out;
  });
  return rep;
}

AuditReport t_positivity_audit(const QuasiCartanMatrix& A, int max_len, int threads) {
  AuditReport rep = start("t-positivity", A);
  rep.proven = rep.hypothesis == HypothesisClass::ProductAtLeast4;
  CoxeterGroup G(A);
  auto ts = triples(G, max_len);
  for (const auto& t : ts) rep.cases += G.reduced_words(t.w).size();
  run(rep, ts.size(), threads, [&](std::size_t k) {
    const auto& t = ts[k];
    std::vector<Violation> out;
    for (const auto& iota : G.reduced_words(t.w)) {
      MultiPoly p = deformed_p(A, G, t.u, t.v, iota);
      if (!p.coefficientwise_nonneg()) out.push_back({t.u.canonical, t.v.canonical, t.w.canonical, iota, p.to_string()});
    }
    return out;
  });
  return rep;
}

std::vector<ClassPolynomials> deformed_by_class(const QuasiCartanMatrix& A, const CoxeterGroup& G,
                                                const GroupElement& u, const GroupElement& v,
                                                const GroupElement& w, int threads) {
  std::vector<ClassPolynomials> out;
  for (auto& cls : commutativity_classes(G.reduced_words(w), A)) {
    ClassPolynomials c;
    c.values.resize(cls.size());
    parallel_for(cls.size(), threads, [&](std::size_t k) { c.values[k] = deformed_p(A, G, u, v, cls[k]); });
    c.words = std::move(cls);
    out.push_back(std::move(c));
  }
  return out;
}

AuditReport commutativity_invariance_audit(const QuasiCartanMatrix& A, int max_len, int threads) {
  AuditReport rep = start("commutativity", A);
  CoxeterGroup G(A);
  auto ts = triples(G, max_len);
  rep.cases = ts.size();
  run(rep, ts.size(), threads, [&](std::size_t k) {
    const auto& t = ts[k];
    std::vector<Violation> out;
    for (const auto& cls : deformed_by_class(A, G, t.u, t.v, t.w))
      for (std::size_t j = 1; j < cls.words.size(); ++j)
        if (!(cls.values[j] == cls.values[0]))
          out.push_back({t.u.canonical, t.v.canonical, t.w.canonical, cls.words[j],
                         cls.values[j].to_string() + " != " + cls.values[0].to_string()});
    return out;
  });
  return rep;
}

}  // namespace lrc
