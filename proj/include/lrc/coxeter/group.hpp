#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "lrc/coxeter/cartan.hpp"
#include "lrc/coxeter/word.hpp"

namespace lrc {

// Element of W given by its ShortLex-least reduced word.
struct GroupElement {
  Word canonical;
  std::size_t length() const { return canonical.size(); }
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.canonical <=> b.canonical;
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return WordHash{}(g.canonical); }
};

// Word problem by Tits moves. Thread safe; caches braid closures.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(std::vector<std::vector<int>> orders);
  explicit CoxeterGroup(const QuasiCartanMatrix& A) : CoxeterGroup(A.orders()) {}

  int rank() const { return n_; }
  int order(int i, int j) const { return orders_[i - 1][j - 1]; }

  GroupElement normal_form(const Word& w) const;
  GroupElement element(const Word& w) const { return normal_form(w); }
  bool is_reduced(const Word& w) const;
  // sorted R(w)
  const std::vector<Word>& reduced_words(const GroupElement& w) const;
  bool in_reduced_words(const Word& iota, const GroupElement& w) const;
  // true when w s_i is longer than w
  bool right_ascent(const GroupElement& w, int i) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement identity() const { return {}; }

  // All elements of length <= max_len in (length, ShortLex) order.
  // Throws ResourceCap when more than cap elements are produced.
  std::vector<GroupElement> elements_up_to(int max_len, std::size_t cap = 200000) const;

  // Braid move at 0-based position p. Returns false when the letters there do
  // not form an alternating factor of length n_ij; throws InfiniteOrderMisuse
  // when n_ij is infinite.
  bool braid_move(Word& w, std::size_t p) const;

 private:
  struct Closure {
    std::vector<Word> words;  // sorted
    std::unordered_map<Word, bool, WordHash> set;
  };
  // braid closure of a reduced word, or a shorter word exposing a cancellation
  const Closure* closure_or_shorten(Word& w) const;
  void check_letters(const Word& w) const;
  bool try_braid(Word& w, std::size_t p) const;

  int n_;
  std::vector<std::vector<int>> orders_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, std::shared_ptr<const Closure>, WordHash> by_canonical_;
  mutable std::unordered_map<Word, Word, WordHash> normal_cache_;
};

std::vector<std::vector<Word>> commutativity_classes(const std::vector<Word>& words, const QuasiCartanMatrix& A);
bool is_admissible_seq(const Word& w);
// all strictly increasing 1-based position sets K with iota_K = sub, lex order
std::vector<std::vector<int>> subword_occurrences(const Word& iota, const Word& sub);
// same as bit masks (bit k <-> position k+1)
std::vector<std::uint32_t> subword_masks(const Word& iota, const Word& sub);

}  // namespace lrc
