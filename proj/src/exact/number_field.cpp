#include "lrc/exact/number_field.hpp"

#include <deque>
#include <mutex>

#include "lrc/error.hpp"

namespace lrc {

NumberField::NumberField(const AlgebraicSpec& spec) : spec_(spec) {
  for (long c : spec.min_poly) min_poly_.emplace_back(c);
  upoly::trim(min_poly_);
  degree_ = upoly::degree(min_poly_);
  if (degree_ < 1) throw Error(ErrorKind::InvalidMatrix, "min_poly must have degree >= 1");
  if (min_poly_.back() != 1) throw Error(ErrorKind::InvalidMatrix, "min_poly must be monic");
  if (!(spec.root_lo < spec.root_hi)) throw Error(ErrorKind::InvalidMatrix, "empty root_interval");
  Rational flo = upoly::eval(min_poly_, spec.root_lo), fhi = upoly::eval(min_poly_, spec.root_hi);
  if (sgn(flo) * sgn(fhi) >= 0 || upoly::sturm_count(min_poly_, spec.root_lo, spec.root_hi) != 1)
    throw Error(ErrorKind::InvalidMatrix, "root_interval does not isolate exactly one root");
  if (degree_ > 1 && spec.name.empty()) throw Error(ErrorKind::InvalidMatrix, "generator needs a name");
}

const NumberField* NumberField::intern(const AlgebraicSpec& spec) {
  static std::mutex mu;
  static std::deque<NumberField> pool;
  std::lock_guard lock(mu);
  for (const auto& f : pool)
    if (f.spec_ == spec) return &f;
  return &pool.emplace_back(spec);
}

const NumberField* NumberField::rationals() {
  static const NumberField* q = intern({"", {0, 1}, Rational(-1), Rational(1)});
  return q;
}

const NumberField* NumberField::golden() {
  static const NumberField* f = intern({"rho", {-1, -1, 1}, Rational(1), Rational(2)});
  return f;
}

void NumberField::mul(const Rational* a, const Rational* b, Rational* out) const {
  const int d = degree_;
  if (d == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  // x^d = -sum_{j<d} m_j x^j
  for (int k = 2 * d - 2; k >= d; --k) {
    if (sgn(prod[k]) == 0) continue;
    for (int j = 0; j < d; ++j) prod[k - d + j] -= prod[k] * min_poly_[j];
    prod[k] = 0;
  }
  for (int i = 0; i < d; ++i) out[i] = prod[i];
}

bool NumberField::inverse(const Rational* a, Rational* out) const {
  RatPoly p(a, a + degree_);
  upoly::trim(p);
  if (p.empty()) return false;
  if (degree_ == 1) {
    out[0] = 1 / a[0];
    return true;
  }
  // extended Euclid: s*p + t*min_poly = gcd
  RatPoly r0 = min_poly_, r1 = p, s0, s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q, r;
    upoly::divmod(r0, r1, q, r);
    RatPoly s = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorKind::InvalidMatrix, "min_poly is not irreducible");
  for (int i = 0; i < degree_; ++i) out[i] = i < int(s0.size()) ? s0[i] / r0[0] : Rational(0);
  return true;
}

int NumberField::sign(const Rational* a) const {
  RatPoly s(a, a + degree_);
  upoly::trim(s);
  if (s.empty()) return 0;
  if (s.size() == 1) return sgn(s[0]);
  Rational lo = spec_.root_lo, hi = spec_.root_hi;
  RatPoly h = upoly::gcd(s, min_poly_);
  if (h.size() > 1 && upoly::sturm_count(h, lo, hi) > 0) return 0;
  const int flo = sgn(upoly::eval(min_poly_, lo));
  for (;;) {
    if (sgn(upoly::eval(s, lo)) != 0 && upoly::sturm_count(s, lo, hi) == 0) return sgn(upoly::eval(s, lo));
    Rational mid = (lo + hi) / 2;
    int fm = sgn(upoly::eval(min_poly_, mid));
    if (fm == 0) return sgn(upoly::eval(s, mid));
    if (fm == flo)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace lrc
