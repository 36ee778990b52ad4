#pragma once

#include <boost/container/small_vector.hpp>
#include <string>

#include "lrc/exact/number_field.hpp"

namespace lrc {

// Element of an interned NumberField in the power basis 1, g, ..., g^{d-1}.
// Rational scalars combine freely with any field; two different
// non-rational fields raise MixedRing.
class Scalar {
 public:
  using Coords = boost::container::small_vector<Rational, 2>;

  Scalar() : Scalar(NumberField::rationals()) {}
  explicit Scalar(const NumberField* f);
  Scalar(const NumberField* f, const Rational& r);
  explicit Scalar(const Rational& r) : Scalar(NumberField::rationals(), r) {}
  static Scalar from_int(long v) { return Scalar(Rational(v)); }
  static Scalar generator(const NumberField* f);
  static Scalar from_coords(const NumberField* f, Coords c);

  const NumberField* field() const { return field_; }
  const Coords& coords() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // all coordinates beyond the first are zero
  const Rational& rational_part() const { return c_[0]; }
  int sign() const { return field_->sign(c_.data()); }
  // Value in field f; throws MixedRing unless this is rational or already in f.
  Scalar in_field(const NumberField* f) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;  // throws InexactDivision on zero
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned e) const;
  // "2", "-3/2", "rho", "2*rho - 1"
  std::string to_string() const;
  // number of nonzero coordinates
  int support() const;

 private:
  const NumberField* common(const Scalar& o) const;
  void promote(const NumberField* f);

  const NumberField* field_;
  Coords c_;
};

std::string rational_to_string(const Rational& r);

}  // namespace lrc
