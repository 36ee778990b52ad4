#include "lrc/exact/scalar.hpp"

#include "lrc/error.hpp"

namespace lrc {

Scalar::Scalar(const NumberField* f) : field_(f), c_(f->degree(), Rational(0)) {}

Scalar::Scalar(const NumberField* f, const Rational& r) : Scalar(f) { c_[0] = r; }

Scalar Scalar::generator(const NumberField* f) {
  Scalar s(f);
  if (f->degree() == 1)
    s.c_[0] = -Rational(f->min_poly()[0]);
  else
    s.c_[1] = 1;
  return s;
}

Scalar Scalar::from_coords(const NumberField* f, Coords c) {
  if (int(c.size()) != f->degree()) throw Error(ErrorKind::SizeMismatch, "coordinate count differs from field degree");
  Scalar s(f);
  s.c_ = std::move(c);
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && c_[0] == 1; }

int Scalar::support() const {
  int n = 0;
  for (const auto& x : c_) n += sgn(x) != 0;
  return n;
}

const NumberField* Scalar::common(const Scalar& o) const {
  if (field_ == o.field_) return field_;
  if (field_->degree() == 1 && field_ == NumberField::rationals()) return o.field_;
  if (o.field_->degree() == 1 && o.field_ == NumberField::rationals()) return field_;
  throw Error(ErrorKind::MixedRing, "scalars from different number fields");
}

void Scalar::promote(const NumberField* f) {
  if (f == field_) return;
  Rational r = c_[0];
  field_ = f;
  c_.assign(f->degree(), Rational(0));
  c_[0] = r;
}

Scalar Scalar::in_field(const NumberField* f) const {
  Scalar s = *this;
  if (s.field_ != f) {
    if (s.field_ != NumberField::rationals()) throw Error(ErrorKind::MixedRing, "scalar from a different number field");
    s.promote(f);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const NumberField* f = common(o);
  promote(f);
  if (o.field_ == f) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    c_[0] += o.c_[0];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  const NumberField* f = common(o);
  promote(f);
  if (o.field_ == f) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else {
    c_[0] -= o.c_[0];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const NumberField* f = common(o);
  if (o.field_ != f) {  // o rational
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (field_ != f) {  // this rational
    Rational r = c_[0];
    *this = o;
    for (auto& x : c_) x *= r;
    return *this;
  }
  if (f->degree() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  Coords out(c_.size());
  f->mul(c_.data(), o.c_.data(), out.data());
  c_ = std::move(out);
  return *this;
}

Scalar Scalar::inverse() const {
  Scalar s(field_);
  if (!field_->inverse(c_.data(), s.c_.data())) throw Error(ErrorKind::InexactDivision, "division by zero");
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  const NumberField* f = a.common(b);
  return a.in_field(f).c_ == b.in_field(f).c_;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(field_, Rational(1)), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Scalar::to_string() const {
  std::string out;
  for (int k = int(c_.size()) - 1; k >= 0; --k) {
    const Rational& x = c_[k];
    if (sgn(x) == 0) continue;
    Rational ax = abs(x);
    std::string mag;
    if (k == 0) {
      mag = rational_to_string(ax);
    } else {
      std::string g = field_->generator_name();
      if (k > 1) g += "^" + std::to_string(k);
      mag = ax == 1 ? g : rational_to_string(ax) + "*" + g;
    }
    if (out.empty())
      out = (sgn(x) < 0 ? "-" : "") + mag;
    else
      out += (sgn(x) < 0 ? " - " : " + ") + mag;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lrc
