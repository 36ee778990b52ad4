#pragma once

#include <string>
#include <vector>

#include "lrc/coxeter/group.hpp"

namespace lrc {

enum class HypothesisClass { ProductAtLeast4, DiscreteTable, Other };
std::string to_string(HypothesisClass h);
// a_ij < 0 and a_ij a_ji >= 4 for all i != j, else the crystallographic/dihedral table, else other
HypothesisClass hypothesis_class(const QuasiCartanMatrix& A);

struct RootPositivity {
  bool ok = true;
  std::string witness;  // empty when ok
};
// w = s_{i_2} ... s_{i_{m-1}}: w(alpha_{i_m}) >= 0 and <w(alpha_{i_m}), alpha_{i_1}^vee> <= 0
RootPositivity root_positivity_check(const QuasiCartanMatrix& A, const Word& iota);

struct Violation {
  Word u, v, w, iota;
  std::string value;
};

struct AuditReport {
  std::string kind;
  std::string matrix_id;
  HypothesisClass hypothesis = HypothesisClass::Other;
  bool proven = false;  // a violation here is a hard failure
  std::size_t cases = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  bool passed() const { return violations.empty(); }
};

// c >= 0 and p coefficientwise nonnegative for all u, v, w with l(w) <= max_len
AuditReport nonneg_audit(const QuasiCartanMatrix& A, int max_len, int threads = 1);
// p^iota_{u,v}(t) coefficientwise nonnegative for every iota in R(w)
AuditReport t_positivity_audit(const QuasiCartanMatrix& A, int max_len, int threads = 1);
// p^iota_{u,v}(t) constant on commutativity classes of R(w)
AuditReport commutativity_invariance_audit(const QuasiCartanMatrix& A, int max_len, int threads = 1);

struct ClassPolynomials {
  std::vector<Word> words;
  std::vector<MultiPoly> values;  // one per word
};
std::vector<ClassPolynomials> deformed_by_class(const QuasiCartanMatrix& A, const CoxeterGroup& G,
                                                const GroupElement& u, const GroupElement& v,
                                                const GroupElement& w, int threads = 1);

}  // namespace lrc
