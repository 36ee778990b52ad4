#include "lrc/oracles/recursion.hpp"

#include <algorithm>
#include <set>

#include "lrc/coxeter/roots.hpp"
#include "lrc/error.hpp"

namespace lrc {

DecoratedWord DecoratedWord::plain(const Word& w) {
  DecoratedWord d;
  for (std::size_t k = 0; k < w.size(); ++k) d.push_back(w[k], w[k]);
  return d;
}

DecoratedWord DecoratedWord::positions(const Word& iota, std::uint32_t K) {
  DecoratedWord d;
  for (std::size_t k = 0; k < iota.size(); ++k)
    if (K >> k & 1u) d.push_back(iota[k], int(k) + 1);
  return d;
}

void DecoratedWord::push_back(int letter, int tag) {
  if (tag < 1 || tag > 255) throw Error(ErrorKind::IndexOutOfRange, "tag outside 1..255");
  letters_.push_back(letter);
  tags_.push_back(tag);
}

bool DecoratedWord::repetition_free() const {
  std::set<int> seen(tags_.begin(), tags_.end());
  return seen.size() == tags_.size();
}

RelativeRecursion::RelativeRecursion(const QuasiCartanMatrix& A, DecoratedWord iota, bool memoize)
    : A_(A), iota_(std::move(iota)), memoize_(memoize), letter_of_tag_(256, 0) {
  for (std::size_t k = 0; k < iota_.size(); ++k) {
    int& slot = letter_of_tag_[iota_.tag(k)];
    if (slot != 0 && slot != iota_.letter(k))
      throw Error(ErrorKind::SizeMismatch, "one tag used for two different letters");
    slot = iota_.letter(k);
  }
}

MultiPoly RelativeRecursion::coefficient(const DecoratedWord& p, const DecoratedWord& q) {
  std::string a, b;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (letter_of_tag_[p.tag(k)] != p.letter(k)) return MultiPoly(A_.ring());
    a.push_back(char(p.tag(k)));
  }
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (letter_of_tag_[q.tag(k)] != q.letter(k)) return MultiPoly(A_.ring());
    b.push_back(char(q.tag(k)));
  }
  return rec(0, a, b);
}

MultiPoly RelativeRecursion::rec(std::size_t i, const std::string& a, const std::string& b) {
  const std::size_t rest = iota_.size() - i;
  if (a.size() > rest || b.size() > rest || a.size() + b.size() < rest) return MultiPoly(A_.ring());
  if (rest == 0) return MultiPoly::constant(A_.ring(), 1);
  std::string key;
  if (memoize_) {
    key.reserve(a.size() + b.size() + 2);
    key.push_back(char(i + 1));
    key += a;
    key.push_back('\0');
    key += b;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const int c = iota_.letter(i);
  const char t = char(iota_.tag(i));
  const bool ha = !a.empty() && a[0] == t, hb = !b.empty() && b[0] == t;
  MultiPoly r = demazure(A_, c, rec(i + 1, a, b));
  if (ha) r += simple_reflect_poly(A_, c, rec(i + 1, a.substr(1), b));
  if (hb) r += simple_reflect_poly(A_, c, rec(i + 1, a, b.substr(1)));
  if (ha && hb) r += MultiPoly::alpha(A_.ring(), c) * simple_reflect_poly(A_, c, rec(i + 1, a.substr(1), b.substr(1)));
  if (memoize_) memo_.emplace(std::move(key), r);
  return r;
}

MultiPoly rel_coeff_rec(const QuasiCartanMatrix& A, const DecoratedWord& iota, const DecoratedWord& p,
                        const DecoratedWord& q) {
  return RelativeRecursion(A, iota).coefficient(p, q);
}

MultiPoly rel_coeff_rec(const QuasiCartanMatrix& A, const Word& iota, const Word& p, const Word& q) {
  return rel_coeff_rec(A, DecoratedWord::plain(iota), DecoratedWord::plain(p), DecoratedWord::plain(q));
}

namespace {
// membership flags of q's tags along iota, or false if q is not a subsequence
bool embed(const DecoratedWord& iota, const DecoratedWord& q, std::vector<char>& in) {
  in.assign(iota.size(), 0);
  std::size_t j = 0;
  for (std::size_t k = 0; k < iota.size() && j < q.size(); ++k)
    if (iota.tag(k) == q.tag(j)) {
      if (iota.letter(k) != q.letter(j)) return false;
      in[k] = 1;
      ++j;
    }
  return j == q.size();
}
}  // namespace

MultiPoly rel_coeff_free_path(const QuasiCartanMatrix& A, const DecoratedWord& iota, const DecoratedWord& p,
                              const DecoratedWord& q) {
  if (!iota.repetition_free()) throw Error(ErrorKind::NotRepetitionFree, "free path needs a repetition-free word");
  std::vector<char> inp, inq;
  if (!embed(iota, p, inp) || !embed(iota, q, inq)) return MultiPoly(A.ring());
  MultiPoly f = MultiPoly::constant(A.ring(), 1);
  for (std::size_t k = iota.size(); k-- > 0;) {
    int c = iota.letter(k);
    if (inp[k] && inq[k])
      f = MultiPoly::alpha(A.ring(), c) * simple_reflect_poly(A, c, f);
    else if (inp[k] || inq[k])
      f = simple_reflect_poly(A, c, f);
    else
      f = demazure(A, c, f);
  }
  return f;
}

MultiPoly rel_coeff_free_path(const QuasiCartanMatrix& A, const Word& iota, const Word& p, const Word& q) {
  return rel_coeff_free_path(A, DecoratedWord::plain(iota), DecoratedWord::plain(p), DecoratedWord::plain(q));
}

}  // namespace lrc
