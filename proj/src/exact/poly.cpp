#include "lrc/exact/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "lrc/error.hpp"

namespace lrc {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MixedRing: return "MixedRing";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotReducedFor: return "NotReducedFor";
    case ErrorKind::NonAdmissibleBase: return "NonAdmissibleBase";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotRepetitionFree: return "NotRepetitionFree";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::InfiniteOrderMisuse: return "InfiniteOrderMisuse";
    case ErrorKind::ResourceCap: return "ResourceCap";
  }
  return "Error";
}

const Ring* Ring::get(const NumberField* f, int rank) {
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorKind::InvalidMatrix, "rank out of supported range 1.." + std::to_string(kMaxRank));
  static std::mutex mu;
  static std::deque<Ring> pool;
  std::lock_guard lock(mu);
  for (const auto& r : pool)
    if (r.field_ == f && r.rank_ == rank) return &r;
  return &pool.emplace_back(f, rank);
}

std::string Ring::var_name(int v) const {
  if (v < rank_) return "a" + std::to_string(v + 1);
  if (v == t_var()) return "t";
  if (v == a_var()) return "a";
  return "b";
}

int Ring::var_index(std::string_view name) const {
  if (name == "t") return t_var();
  if (name == "a") return a_var();
  if (name == "b") return b_var();
  if (name.size() >= 2 && name[0] == 'a' && name[1] != '0') {
    int k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      k = k * 10 + (name[i] - '0');
      if (k > rank_) return -1;
    }
    return k >= 1 ? k - 1 : -1;
  }
  return -1;
}

namespace {

const simd::KernelTable& K() { return simd::active_kernels(); }

bool mono_greater(const Mono& a, const Mono& b) { return K().compare(a, b) > 0; }

Mono unit_mono(int var) {
  Mono m;
  m.e[0] = 1;
  m.e[var + 1] = 1;
  return m;
}

Mono strip_var(Mono m, int var) {
  m.e[0] = std::uint8_t(m.e[0] - m.e[var + 1]);
  m.e[var + 1] = 0;
  return m;
}

}  // namespace

const Ring* MultiPoly::common(const MultiPoly& o) const {
  if (ring_ == o.ring_ || o.ring_ == nullptr) return ring_;
  if (ring_ == nullptr) return o.ring_;
  throw Error(ErrorKind::MixedRing, "polynomials over different rings");
}

MultiPoly MultiPoly::constant(const Ring* r, const Scalar& c) {
  MultiPoly p(r);
  if (!c.is_zero()) p.terms_.push_back({Mono{}, c.in_field(r->field())});
  return p;
}

MultiPoly MultiPoly::variable(const Ring* r, int var) {
  if (var < 0 || var >= r->nvars()) throw Error(ErrorKind::IndexOutOfRange, "variable index");
  MultiPoly p(r);
  p.terms_.push_back({unit_mono(var), Scalar(r->field(), Rational(1))});
  return p;
}

MultiPoly MultiPoly::from_terms(const Ring* r, std::vector<Term> terms) {
  MultiPoly p(r);
  if (terms.empty()) return p;
  std::vector<std::uint32_t> idx(terms.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return mono_greater(terms[x].mono, terms[y].mono); });
  p.terms_.reserve(terms.size());
  for (std::size_t k = 0; k < idx.size();) {
    Term t = std::move(terms[idx[k]]);
    std::size_t j = k + 1;
    for (; j < idx.size() && terms[idx[j]].mono == t.mono; ++j) t.coeff += terms[idx[j]].coeff;
    if (!t.coeff.is_zero()) {
      t.coeff = t.coeff.in_field(r->field());
      p.terms_.push_back(std::move(t));
    }
    k = j;
  }
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.e[0] == 0); }

bool MultiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }

Scalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.e[0] == 0) return terms_.back().coeff;
  return ring_ ? Scalar(ring_->field()) : Scalar();
}

Scalar MultiPoly::as_scalar() const {
  if (!is_constant()) throw Error(ErrorKind::SizeMismatch, "polynomial is not a constant: " + to_string());
  return constant_term();
}

bool MultiPoly::has_var(int var) const {
  for (const auto& t : terms_)
    if (mono_exp(t.mono, var)) return true;
  return false;
}

namespace {
int alpha_deg(const Mono& m, int rank) {
  int d = 0;
  for (int v = 0; v < rank; ++v) d += m.e[v + 1];
  return d;
}
}  // namespace

bool MultiPoly::alpha_free() const { return alpha_degree() <= 0; }

int MultiPoly::alpha_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, alpha_deg(t.mono, ring_->rank()));
  return d;
}

bool MultiPoly::is_alpha_homogeneous(int d) const {
  for (const auto& t : terms_)
    if (alpha_deg(t.mono, ring_->rank()) != d) return false;
  return true;
}

MultiPoly MultiPoly::alpha_degree_part(int d) const {
  MultiPoly p(ring_);
  for (const auto& t : terms_)
    if (alpha_deg(t.mono, ring_->rank()) == d) p.terms_.push_back(t);
  return p;
}

bool MultiPoly::coefficientwise_nonneg() const {
  for (const auto& t : terms_)
    if (t.coeff.sign() < 0) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void MultiPoly::add_scaled(const MultiPoly& o, int sign) {
  const Ring* r = common(o);
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    int c = i == terms_.end() ? -1 : j == o.terms_.end() ? 1 : K().compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back({j->mono, sign > 0 ? j->coeff : -j->coeff});
      ++j;
    } else {
      if (sign > 0)
        i->coeff += j->coeff;
      else
        i->coeff -= j->coeff;
      if (!i->coeff.is_zero()) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  ring_ = r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const Ring* r = a.common(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(r);
  const MultiPoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const MultiPoly& small = &big == &a ? b : a;
  const std::size_t n = big.terms_.size();
  std::vector<Mono> src(n);
  for (std::size_t k = 0; k < n; ++k) src[k] = big.terms_[k].mono;
  std::vector<Mono> shifted(n);
  if (small.terms_.size() == 1) {
    const Term& s = small.terms_[0];
    if (!K().mul_n(src.data(), n, s.mono, shifted.data())) throw Error(ErrorKind::Overflow, "exponent overflow");
    MultiPoly p(r);
    p.terms_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) p.terms_.push_back({shifted[k], big.terms_[k].coeff * s.coeff});
    return p;
  }
  std::vector<Term> all;
  all.reserve(n * small.terms_.size());
  for (const auto& s : small.terms_) {
    if (!K().mul_n(src.data(), n, s.mono, shifted.data())) throw Error(ErrorKind::Overflow, "exponent overflow");
    for (std::size_t k = 0; k < n; ++k) all.push_back({shifted[k], big.terms_[k].coeff * s.coeff});
  }
  return MultiPoly::from_terms(r, std::move(all));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty()) a.common(b);
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::exact_div_linear(int i) const {
  MultiPoly p(ring_);
  if (terms_.empty()) return p;
  const std::size_t n = terms_.size();
  std::vector<Mono> src(n), dst(n);
  for (std::size_t k = 0; k < n; ++k) src[k] = terms_[k].mono;
  if (!K().div_n(src.data(), n, unit_mono(ring_->alpha_var(i)), dst.data()))
    throw Error(ErrorKind::NotDivisible, "term without alpha_" + std::to_string(i) + " in " + to_string());
  p.terms_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) p.terms_.push_back({dst[k], terms_[k].coeff});
  return p;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& g) const {
  const Ring* r = common(g);
  if (g.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  MultiPoly q(r), rem = *this;
  const Term& lg = g.terms_.front();
  Scalar inv = lg.coeff.inverse();
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_.front();
    Mono m;
    if (!K().div_n(&lr.mono, 1, lg.mono, &m))
      throw Error(ErrorKind::InexactDivision, to_string() + " is not divisible by " + g.to_string());
    MultiPoly t(r);
    t.terms_.push_back({m, lr.coeff * inv});
    rem -= t * g;
    q += t;
  }
  return q;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  const Ring* r = common(value);
  std::vector<MultiPoly> powers{constant(r, 1)};
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = mono_exp(t.mono, var);
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    while (int(powers.size()) <= e) powers.push_back(powers.back() * value);
    MultiPoly rest(r);
    rest.terms_.push_back({strip_var(t.mono, var), t.coeff});
    for (auto& x : (rest * powers[e]).terms_) out.push_back(std::move(x));
  }
  return from_terms(r, std::move(out));
}

MultiPoly MultiPoly::substitute_t(const Scalar& value) const {
  if (!ring_) return *this;
  return substitute(ring_->t_var(), constant(ring_, value));
}

MultiPoly MultiPoly::map_alphas(const std::vector<MultiPoly>& images) const {
  if (!ring_ || terms_.empty()) return *this;
  const int n = ring_->rank();
  if (int(images.size()) != n) throw Error(ErrorKind::SizeMismatch, "map_alphas needs one image per root");
  std::vector<std::vector<MultiPoly>> powers(n);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Mono rest = t.mono;
    for (int v = 0; v < n; ++v) rest = strip_var(rest, v);
    MultiPoly acc(ring_);
    acc.terms_.push_back({rest, t.coeff});
    for (int v = 0; v < n; ++v) {
      int e = mono_exp(t.mono, v);
      if (!e) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(constant(ring_, 1));
      while (int(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
      acc = acc * pw[e];
    }
    for (auto& x : acc.terms_) out.push_back(std::move(x));
  }
  return from_terms(ring_, std::move(out));
}

MultiPoly substitute_t(const MultiPoly& f, const Scalar& value) { return f.substitute_t(value); }

bool poly_is_coefficientwise_nonneg(const MultiPoly& f) { return f.coefficientwise_nonneg(); }

int scalar_sign(const Scalar& s) { return s.sign(); }

}  // namespace lrc
