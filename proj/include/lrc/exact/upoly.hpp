#pragma once

#include <gmpxx.h>

#include <vector>

namespace lrc {

using Rational = mpq_class;

// Dense univariate polynomial over Q, constant term first, no trailing zeros.
using RatPoly = std::vector<Rational>;

namespace upoly {

void trim(RatPoly& p);
int degree(const RatPoly& p);  // -1 for zero
Rational eval(const RatPoly& p, const Rational& x);
RatPoly derivative(const RatPoly& p);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
// a = q*b + r
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly gcd(RatPoly a, RatPoly b);  // monic, zero if both zero
// Number of distinct real roots in (lo, hi].
int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace upoly
}  // namespace lrc
