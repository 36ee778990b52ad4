#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// Sequence of 1-based generator indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(const std::vector<int>& letters);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](std::size_t k) const { return static_cast<unsigned char>(s_[k]); }
  int back() const { return (*this)[size() - 1]; }
  void push_back(int letter) { s_.push_back(static_cast<char>(letter)); }
  void pop_back() { s_.pop_back(); }
  std::vector<int> letters() const;

  // positions given by bits of mask (bit k <-> position k+1)
  Word select(std::uint32_t mask) const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word operator+(const Word& o) const;
  Word reversed() const;
  int max_letter() const;

  std::string to_string() const;  // "1,2,1"; "" for the empty word
  std::string label() const;      // "121" (comma separated when a letter exceeds 9)
  static Word parse(std::string_view text);

  const std::string& raw() const { return s_; }
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string s_;
};

bool shortlex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.raw()); }
};

}  // namespace lrc
