#include "lrc/closedform/bounded_map.hpp"

#include <bit>
#include <functional>

#include "lrc/coxeter/roots.hpp"
#include "lrc/error.hpp"

namespace lrc {

std::vector<int> positions_of(PositionSet s) {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k)
    if (s >> k & 1u) out.push_back(k + 1);
  return out;
}

PositionSet position_set(const std::vector<int>& positions) {
  PositionSet s = 0;
  for (int p : positions) {
    if (p < 1 || p > 32) throw Error(ErrorKind::IndexOutOfRange, "position outside 1..32");
    s |= 1u << (p - 1);
  }
  return s;
}

std::string positions_to_string(PositionSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : positions_of(s)) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

bool position_set_less(PositionSet a, PositionSet b) { return positions_of(a) < positions_of(b); }

PositionSet BoundedMap::nonzero_domain() const {
  PositionSet s = 0;
  for (int l : positions_of(domain))
    if (target[l - 1]) s |= 1u << (l - 1);
  return s;
}

bool BoundedMap::well_formed() const {
  if ((domain & ~M) != 0) return false;
  PositionSet full = m == 32 ? ~0u : (1u << m) - 1;
  if ((M & ~full) != 0) return false;
  PositionSet hit = 0;
  for (int l : positions_of(domain)) {
    int t = target[l - 1];
    if (t == 0) continue;
    if (t >= l || (M >> (t - 1) & 1u) || (hit >> (t - 1) & 1u)) return false;
    hit |= 1u << (t - 1);
  }
  return hit == (full & ~M);
}

std::string BoundedMap::to_string() const {
  std::string out;
  for (int l : positions_of(domain)) {
    if (!out.empty()) out += ", ";
    out += std::to_string(l) + "->" + std::to_string(int(target[l - 1]));
  }
  return out;
}

std::vector<BoundedMap> enumerate_bounded_maps(PositionSet L, PositionSet M, int m, bool allow_zero) {
  if ((L & ~M) != 0) throw Error(ErrorKind::NotNested, "L must be a subset of M");
  const int nl = std::popcount(L), nm = std::popcount(M);
  if (nl + nm < m) throw Error(ErrorKind::SizeMismatch, "|L| + |M| < m");
  const PositionSet full = m == 32 ? ~0u : (1u << m) - 1;
  const std::vector<int> dom = positions_of(L);
  std::vector<BoundedMap> out;
  if (!allow_zero && nl + nm != m) return out;
  BoundedMap cur;
  cur.m = m;
  cur.domain = L;
  cur.M = M;
  std::function<void(std::size_t, PositionSet, int)> go = [&](std::size_t idx, PositionSet free, int zeros) {
    if (idx == dom.size()) {
      if (free == 0) out.push_back(cur);
      return;
    }
    int l = dom[idx];
    if (std::popcount(free) > int(dom.size() - idx)) return;
    if (zeros > 0) {
      cur.target[l - 1] = 0;
      go(idx + 1, free, zeros - 1);
    }
    for (int k = 1; k < l; ++k)
      if (free >> (k - 1) & 1u) {
        cur.target[l - 1] = std::uint8_t(k);
        go(idx + 1, free & ~(1u << (k - 1)), zeros);
      }
    cur.target[l - 1] = 0;
  };
  go(0, full & ~M, nl + nm - m);
  return out;
}

bool is_admissible_subset(const Word& iota, PositionSet S) {
  int last = -1;
  for (std::size_t k = 0; k < iota.size(); ++k)
    if (S >> k & 1u) {
      if (iota[k] == last) return false;
      last = iota[k];
    }
  return true;
}

bool is_iota_admissible(const Word& iota, const BoundedMap& phi) {
  PositionSet S = phi.M;
  for (int l : positions_of(phi.domain)) {
    if (!is_admissible_subset(iota, S)) return false;
    if (int t = phi(l)) S |= 1u << (t - 1);
  }
  return true;
}

PhiValue p_phi(const QuasiCartanMatrix& A, const Word& iota, const BoundedMap& phi) {
  PhiValue out{MultiPoly::constant(A.ring(), 1), MultiPoly::constant(A.ring(), 1)};
  PositionSet S = phi.M;
  for (int l : positions_of(phi.domain)) {
    int t = phi(l);
    RootVector v = RootVector::simple(A, iota[l - 1]);
    for (int r = l - 1; r > t; --r)
      if (S >> (r - 1) & 1u) v = simple_reflect(A, iota[r - 1], v);
    if (t) {
      out.p *= -pair(A, v, iota[t - 1]);
      S |= 1u << (t - 1);
    } else {
      out.alpha_product *= v.as_linear_form(A.ring());
    }
  }
  return out;
}

}  // namespace lrc
