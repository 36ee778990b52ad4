#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "lrc/coxeter/cartan.hpp"
#include "lrc/coxeter/word.hpp"

namespace lrc {

// Word whose symbols carry a tag; the tag decides equality of letters in the
// recursion while the letter decides how alpha, s and x act. For a plain
// Word the tag is the letter itself.
class DecoratedWord {
 public:
  DecoratedWord() = default;
  static DecoratedWord plain(const Word& w);
  // positions of K (bit k <-> position k+1) tagged by position
  static DecoratedWord positions(const Word& iota, std::uint32_t K);

  std::size_t size() const { return letters_.size(); }
  int letter(std::size_t k) const { return letters_[k]; }
  int tag(std::size_t k) const { return tags_[k]; }
  Word letter_word() const { return Word(letters_); }
  bool repetition_free() const;
  void push_back(int letter, int tag);

  friend bool operator==(const DecoratedWord&, const DecoratedWord&) = default;

 private:
  std::vector<int> letters_, tags_;
};

// Head-first nil-Hecke recursion for p^iota_{iota',iota''}, memoised on the
// remaining suffixes. One instance per base word; not thread safe.
class RelativeRecursion {
 public:
  RelativeRecursion(const QuasiCartanMatrix& A, DecoratedWord iota, bool memoize = true);
  MultiPoly coefficient(const DecoratedWord& p, const DecoratedWord& q);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  MultiPoly rec(std::size_t i, const std::string& a, const std::string& b);

  const QuasiCartanMatrix& A_;
  DecoratedWord iota_;
  bool memoize_;
  std::vector<int> letter_of_tag_;
  std::unordered_map<std::string, MultiPoly> memo_;
};

MultiPoly rel_coeff_rec(const QuasiCartanMatrix& A, const Word& iota, const Word& p, const Word& q);
MultiPoly rel_coeff_rec(const QuasiCartanMatrix& A, const DecoratedWord& iota, const DecoratedWord& p,
                        const DecoratedWord& q);

// f_{i_1} ... f_{i_m}(1) with f = alpha s, s or x; iota must be repetition free.
MultiPoly rel_coeff_free_path(const QuasiCartanMatrix& A, const DecoratedWord& iota, const DecoratedWord& p,
                              const DecoratedWord& q);
MultiPoly rel_coeff_free_path(const QuasiCartanMatrix& A, const Word& iota, const Word& p, const Word& q);

}  // namespace lrc
