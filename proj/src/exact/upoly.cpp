#include "lrc/exact/upoly.hpp"

#include <cassert>

namespace lrc::upoly {

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const RatPoly& p) { return int(p.size()) - 1; }

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * int(k));
  trim(d);
  return d;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  assert(!b.empty());
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

namespace {
int sign_changes(const std::vector<RatPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int sturm_count(const RatPoly& p0, const Rational& lo, const Rational& hi) {
  RatPoly p = p0;
  trim(p);
  if (p.size() <= 1) return 0;
  // square-free part so that distinct roots are counted
  RatPoly g = gcd(p, derivative(p));
  if (g.size() > 1) {
    RatPoly q, r;
    divmod(p, g, q, r);
    p = q;
  }
  std::vector<RatPoly> seq{p, derivative(p)};
  while (seq.back().size() > 1) {
    RatPoly q, r;
    divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

}  // namespace lrc::upoly
