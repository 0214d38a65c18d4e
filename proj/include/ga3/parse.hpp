#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ga3/polynomial.hpp"

namespace ga3 {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + msg),
        position(pos) {}
};

namespace detail {

// Recursive-descent parser for
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := nat ('/' nat)? | var | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    if (peek() == '-') {
      eat('-');
      neg = true;
    }
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  Polynomial factor() {
    Polynomial p = atom();
    if (eat('^')) {
      if (peek() == '-') fail("negative exponent");
      p = p.pow(nat());
    }
    return p;
  }

  int nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
      fail("expected number");
    long long n = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      n = n * 10 + (text_[pos_] - '0');
      if (n > 1000000) fail("number too large");
      ++pos_;
    }
    return static_cast<int>(n);
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit((unsigned char)c)) {
      Rational r(nat());
      if (eat('/')) {
        int d = nat();
        if (d == 0) fail("zero denominator");
        r /= d;
      }
      return Polynomial::constant(r);
    }
    if (c == '(') {
      eat('(');
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isalpha((unsigned char)c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '\''))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(*v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace ga3
