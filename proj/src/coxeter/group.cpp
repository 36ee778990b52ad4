#include "lrc/coxeter/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "lrc/error.hpp"

namespace lrc {

CoxeterGroup::CoxeterGroup(std::vector<std::vector<int>> orders) : n_(int(orders.size())), orders_(std::move(orders)) {}

void CoxeterGroup::check_letters(const Word& w) const {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] < 1 || w[k] > n_)
      throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(w[k]) + " outside 1.." + std::to_string(n_));
}

bool CoxeterGroup::braid_move(Word& w, std::size_t p) const {
  check_letters(w);
  if (p + 1 < w.size() && w[p] != w[p + 1] && order(w[p], w[p + 1]) == 0)
    throw Error(ErrorKind::InfiniteOrderMisuse, "no braid relation between " + std::to_string(w[p]) + " and " +
                                                    std::to_string(w[p + 1]));
  return try_braid(w, p);
}

bool CoxeterGroup::try_braid(Word& w, std::size_t p) const {
  if (p + 1 >= w.size()) return false;
  int i = w[p], j = w[p + 1];
  if (i == j) return false;
  int n = order(i, j);
  if (n == 0) return false;
  if (p + n > w.size()) return false;
  for (int k = 0; k < n; ++k)
    if (w[p + k] != (k % 2 ? j : i)) return false;
  std::vector<int> l = w.letters();
  for (int k = 0; k < n; ++k) l[p + k] = k % 2 ? i : j;
  w = Word(l);
  return true;
}

namespace {

// delete adjacent equal pairs until none remain
Word cancel_pairs(const Word& w) {
  std::vector<int> st;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!st.empty() && st.back() == w[k])
      st.pop_back();
    else
      st.push_back(w[k]);
  }
  return Word(st);
}

int find_pair(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] == w[k + 1]) return int(k);
  return -1;
}

}  // namespace

const CoxeterGroup::Closure* CoxeterGroup::closure_or_shorten(Word& w) const {
  auto c = std::make_shared<Closure>();
  std::deque<Word> queue{w};
  c->set.emplace(w, true);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      Word next = cur;
      if (!try_braid(next, p)) continue;
      if (c->set.count(next)) continue;
      if (find_pair(next) >= 0) {
        w = cancel_pairs(next);
        return nullptr;
      }
      c->set.emplace(next, true);
      queue.push_back(std::move(next));
    }
  }
  for (auto& [word, _] : c->set) c->words.push_back(word);
  std::sort(c->words.begin(), c->words.end());
  Word canon = c->words.front();
  std::lock_guard lock(mu_);
  auto [it, inserted] = by_canonical_.emplace(canon, std::move(c));
  return it->second.get();
}

GroupElement CoxeterGroup::normal_form(const Word& input) const {
  check_letters(input);
  {
    std::lock_guard lock(mu_);
    auto it = normal_cache_.find(input);
    if (it != normal_cache_.end()) return {it->second};
  }
  Word w = cancel_pairs(input);
  const Closure* c = nullptr;
  for (;;) {
    {
      std::lock_guard lock(mu_);
      auto it = normal_cache_.find(w);
      if (it != normal_cache_.end()) {
        Word canon = it->second;
        normal_cache_.emplace(input, canon);
        return {canon};
      }
    }
    c = closure_or_shorten(w);
    if (c) break;
  }
  Word canon = c->words.front();
  std::lock_guard lock(mu_);
  normal_cache_.emplace(input, canon);
  for (const auto& r : c->words) normal_cache_.emplace(r, canon);
  return {canon};
}

bool CoxeterGroup::is_reduced(const Word& w) const { return normal_form(w).length() == w.size(); }

const std::vector<Word>& CoxeterGroup::reduced_words(const GroupElement& w) const {
  {
    std::lock_guard lock(mu_);
    auto it = by_canonical_.find(w.canonical);
    if (it != by_canonical_.end()) return it->second->words;
  }
  GroupElement g = normal_form(w.canonical);
  std::lock_guard lock(mu_);
  auto it = by_canonical_.find(g.canonical);
  if (it == by_canonical_.end()) throw Error(ErrorKind::NotReducedFor, "internal: closure missing");
  return it->second->words;
}

bool CoxeterGroup::in_reduced_words(const Word& iota, const GroupElement& w) const {
  if (iota.size() != w.length()) return false;
  const auto& r = reduced_words(w);
  return std::binary_search(r.begin(), r.end(), iota);
}

bool CoxeterGroup::right_ascent(const GroupElement& w, int i) const {
  for (const auto& r : reduced_words(w))
    if (!r.empty() && r.back() == i) return false;
  return true;
}

GroupElement CoxeterGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  return normal_form(a.canonical + b.canonical);
}

std::vector<GroupElement> CoxeterGroup::elements_up_to(int max_len, std::size_t cap) const {
  std::vector<GroupElement> out{identity()};
  std::vector<GroupElement> level{identity()};
  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    std::set<GroupElement> next;
    for (const auto& w : level)
      for (int i = 1; i <= n_; ++i)
        if (right_ascent(w, i)) {
          Word x = w.canonical;
          x.push_back(i);
          next.insert(normal_form(x));
          if (out.size() + next.size() > cap)
            throw Error(ErrorKind::ResourceCap, "more than " + std::to_string(cap) + " group elements");
        }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::vector<Word>> commutativity_classes(const std::vector<Word>& words, const QuasiCartanMatrix& A) {
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::vector<int> l = words[k].letters();
    for (std::size_t p = 0; p + 1 < l.size(); ++p) {
      if (l[p] == l[p + 1] || !A.a(l[p], l[p + 1]).is_zero()) continue;
      std::swap(l[p], l[p + 1]);
      auto it = index.find(Word(l));
      if (it != index.end()) parent[find(k)] = find(it->second);
      std::swap(l[p], l[p + 1]);
    }
  }
  std::vector<std::vector<Word>> classes;
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::size_t> order(words.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return words[x] < words[y]; });
  for (auto k : order) {
    auto root = find(k);
    auto [it, fresh] = slot.emplace(root, classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(words[k]);
  }
  return classes;
}

bool is_admissible_seq(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] == w[k + 1]) return false;
  return true;
}

namespace {
void occurrences(const Word& iota, const Word& sub, std::size_t from, std::size_t matched, std::uint32_t mask,
                 std::vector<std::uint32_t>& out) {
  if (matched == sub.size()) {
    out.push_back(mask);
    return;
  }
  for (std::size_t k = from; k + (sub.size() - matched) <= iota.size(); ++k)
    if (iota[k] == sub[matched]) occurrences(iota, sub, k + 1, matched + 1, mask | (1u << k), out);
}
}  // namespace

std::vector<std::uint32_t> subword_masks(const Word& iota, const Word& sub) {
  if (iota.size() > 32) throw Error(ErrorKind::TooLarge, "words longer than 32 letters");
  std::vector<std::uint32_t> out;
  occurrences(iota, sub, 0, 0, 0, out);
  return out;
}

std::vector<std::vector<int>> subword_occurrences(const Word& iota, const Word& sub) {
  std::vector<std::vector<int>> out;
  for (auto m : subword_masks(iota, sub)) {
    std::vector<int> k;
    for (int p = 0; p < 32; ++p)
      if (m >> p & 1u) k.push_back(p + 1);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace lrc
