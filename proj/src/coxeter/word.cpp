#include "lrc/coxeter/word.hpp"

#include <algorithm>
#include <charconv>

#include "lrc/error.hpp"

namespace lrc {

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) push_back(l);
}

Word::Word(const std::vector<int>& letters) {
  for (int l : letters) push_back(l);
}

std::vector<int> Word::letters() const {
  std::vector<int> v;
  for (std::size_t k = 0; k < size(); ++k) v.push_back((*this)[k]);
  return v;
}

Word Word::select(std::uint32_t mask) const {
  Word w;
  for (std::size_t k = 0; k < size(); ++k)
    if (mask >> k & 1u) w.s_.push_back(s_[k]);
  return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.s_ = s_.substr(pos, len);
  return w;
}

Word Word::operator+(const Word& o) const {
  Word w = *this;
  w.s_ += o.s_;
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.s_.begin(), w.s_.end());
  return w;
}

int Word::max_letter() const {
  int m = 0;
  for (std::size_t k = 0; k < size(); ++k) m = std::max(m, (*this)[k]);
  return m;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < size(); ++k) {
    if (k) out += ",";
    out += std::to_string((*this)[k]);
  }
  return out;
}

std::string Word::label() const {
  if (max_letter() > 9) return to_string();
  std::string out;
  for (std::size_t k = 0; k < size(); ++k) out += char('0' + (*this)[k]);
  return out;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  if (pos == text.size() || text.substr(pos) == "e" || text.substr(pos) == "()") return w;
  while (pos < text.size()) {
    skip();
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || v < 1 || v > 255) throw Error(ErrorKind::Parse, "bad word '" + std::string(text) + "'");
    w.push_back(v);
    pos = std::size_t(p - text.data());
    skip();
    if (pos < text.size()) {
      if (text[pos] != ',') throw Error(ErrorKind::Parse, "bad word '" + std::string(text) + "'");
      ++pos;
    }
  }
  return w;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace lrc
