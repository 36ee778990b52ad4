#include <cctype>

#include "lrc/error.hpp"
#include "lrc/exact/poly.hpp"

namespace lrc {

namespace {

std::string mono_text(const Ring* r, const Mono& m) {
  std::string s;
  for (int v = 0; v < r->nvars(); ++v) {
    int e = mono_exp(m, v);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += r->var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string m = mono_text(ring_, t.mono);
    bool neg = false;
    std::string mag;
    if (t.coeff.support() == 1) {
      Scalar c = t.coeff;
      for (const auto& x : c.coords())
        if (sgn(x) != 0) neg = sgn(x) < 0;
      if (neg) c = -c;
      std::string cs = c.to_string();
      if (m.empty())
        mag = cs;
      else
        mag = cs == "1" ? m : cs + "*" + m;
    } else {
      std::string cs = t.coeff.to_string();
      if (m.empty())
        mag = terms_.size() == 1 ? cs : "(" + cs + ")";
      else
        mag = "(" + cs + ")*" + m;
    }
    if (out.empty())
      out = neg ? "-" + mag : mag;
    else
      out += (neg ? " - " : " + ") + mag;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const Ring* r, std::string_view s) : r_(r), s_(s) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    MultiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= d.as_scalar().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(unsigned(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(r_, Scalar(r_->field(), Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      const auto* f = r_->field();
      if (f->degree() > 1 && id == f->generator_name()) return MultiPoly::constant(r_, Scalar::generator(f));
      int v = r_->var_index(id);
      if (v < 0) fail("unknown symbol '" + std::string(id) + "'");
      return MultiPoly::variable(r_, v);
    }
    fail("unexpected character");
  }

  const Ring* r_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const Ring* r, std::string_view text) { return Parser(r, text).run(); }

}  // namespace lrc
