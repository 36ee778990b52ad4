#pragma once

#include <string>
#include <vector>

#include "lrc/exact/upoly.hpp"

namespace lrc {

struct AlgebraicSpec {
  std::string name;           // generator symbol; unused when degree is 1
  std::vector<long> min_poly; // monic, constant term first
  Rational root_lo, root_hi;  // isolates the designated real root

  friend bool operator==(const AlgebraicSpec&, const AlgebraicSpec&) = default;
};

// Q(g) for one real algebraic g. Instances are interned and live for the
// whole process, so they are passed around by raw pointer and compared by
// address.
class NumberField {
 public:
  static const NumberField* rationals();
  // Validates the spec (throws Error{InvalidMatrix} on a bad spec).
  static const NumberField* intern(const AlgebraicSpec& spec);
  // Q(rho), rho = 2cos(pi/5)
  static const NumberField* golden();

  int degree() const { return degree_; }
  const AlgebraicSpec& spec() const { return spec_; }
  const std::string& generator_name() const { return spec_.name; }
  const RatPoly& min_poly() const { return min_poly_; }

  // coordinate-vector arithmetic, vectors have length degree()
  void mul(const Rational* a, const Rational* b, Rational* out) const;
  // returns false if a is zero
  bool inverse(const Rational* a, Rational* out) const;
  int sign(const Rational* a) const;

  explicit NumberField(const AlgebraicSpec& spec);

 private:
  AlgebraicSpec spec_;
  RatPoly min_poly_;
  int degree_;
};

}  // namespace lrc
