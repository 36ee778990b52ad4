#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lrc/exact/scalar.hpp"
#include "lrc/simd/monomial_kernels.hpp"

namespace lrc {

// Variables alpha_1..alpha_n, t, a, b over one number field. Interned.
class Ring {
 public:
  static constexpr int kMaxRank = simd::kMaxVars - 3;
  static const Ring* get(const NumberField* f, int rank);

  const NumberField* field() const { return field_; }
  int rank() const { return rank_; }
  int nvars() const { return rank_ + 3; }
  int alpha_var(int i) const { return i - 1; }  // i is 1-based
  int t_var() const { return rank_; }
  int a_var() const { return rank_ + 1; }
  int b_var() const { return rank_ + 2; }
  bool is_alpha_var(int v) const { return v < rank_; }
  std::string var_name(int v) const;
  int var_index(std::string_view name) const;  // -1 when unknown

  Ring(const NumberField* f, int rank) : field_(f), rank_(rank) {}

 private:
  const NumberField* field_;
  int rank_;
};

using Mono = simd::Mono;

inline int mono_exp(const Mono& m, int var) { return m.e[var + 1]; }
inline int mono_degree(const Mono& m) { return m.e[0]; }

struct Term {
  Mono mono;
  Scalar coeff;
};

// Sparse polynomial; terms strictly decreasing in graded-lex order
// (alpha_1 most significant, then alpha_2, ..., t, a, b), no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero, adopts the ring of whatever it is combined with
  explicit MultiPoly(const Ring* r) : ring_(r) {}
  static MultiPoly constant(const Ring* r, const Scalar& c);
  static MultiPoly constant(const Ring* r, long c) { return constant(r, Scalar::from_int(c)); }
  static MultiPoly variable(const Ring* r, int var);
  static MultiPoly alpha(const Ring* r, int i) { return variable(r, r->alpha_var(i)); }
  static MultiPoly t(const Ring* r) { return variable(r, r->t_var()); }
  // Sorts and combines arbitrary terms.
  static MultiPoly from_terms(const Ring* r, std::vector<Term> terms);

  const Ring* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Scalar constant_term() const;
  // Throws InvalidMatrix-free Error{SizeMismatch} if not a constant.
  Scalar as_scalar() const;
  bool has_var(int var) const;
  bool alpha_free() const;
  // -1 for zero, else max total alpha degree
  int alpha_degree() const;
  bool is_alpha_homogeneous(int d) const;
  MultiPoly alpha_degree_part(int d) const;
  bool coefficientwise_nonneg() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  // f / alpha_i; NotDivisible if a term lacks alpha_i.
  MultiPoly exact_div_linear(int i) const;
  // f / g; InexactDivision if g does not divide f.
  MultiPoly exact_div(const MultiPoly& g) const;
  MultiPoly substitute(int var, const MultiPoly& value) const;
  MultiPoly substitute_t(const Scalar& value) const;
  // Ring map fixing t, a, b and sending alpha_j to images[j-1].
  MultiPoly map_alphas(const std::vector<MultiPoly>& images) const;

  std::string to_string() const;
  static MultiPoly parse(const Ring* r, std::string_view text);

 private:
  const Ring* common(const MultiPoly& o) const;
  void add_scaled(const MultiPoly& o, int sign);

  const Ring* ring_ = nullptr;
  std::vector<Term> terms_;
};

MultiPoly substitute_t(const MultiPoly& f, const Scalar& value);
bool poly_is_coefficientwise_nonneg(const MultiPoly& f);
int scalar_sign(const Scalar& s);

}  // namespace lrc
