#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "cherednik/error.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

/// Variable names x, y, z, w for up to four variables, x1..xn otherwise. Both spellings are accepted when parsing.
std::vector<std::string> default_variable_names(int nvars);

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const F& f, int nvars, const std::string& text) : f_(f), n_(nvars), s_(text) {}

  Poly<F> parse() {
    Poly<F> p = expr();
    skip();
    require(pos_ == s_.size(), ErrorCode::ParseError, "unexpected '" + s_.substr(pos_) + "' in polynomial");
    return p;
  }

 private:
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
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    require(pos_ > start, ErrorCode::ParseError, "expected a number at position " + std::to_string(start));
    return std::stol(s_.substr(start, pos_ - start));
  }

  Poly<F> expr() {
    Poly<F> acc(f_, n_);
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = neg ? -term() : term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  Poly<F> term() {
    Poly<F> acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc *= power();
      } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }
  Poly<F> power() {
    Poly<F> base = atom();
    if (eat('^')) return base.pow(static_cast<int>(integer()));
    return base;
  }
  Poly<F> atom() {
    skip();
    require(pos_ < s_.size(), ErrorCode::ParseError, "unexpected end of polynomial");
    if (eat('(')) {
      Poly<F> p = expr();
      require(eat(')'), ErrorCode::ParseError, "missing ')'");
      return p;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly<F>::constant(f_, n_, f_.from_int(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      int index = -1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        require(c == 'x', ErrorCode::ParseError, "indexed variables are written x1, x2, ...");
        index = static_cast<int>(integer()) - 1;
      } else {
        const std::string letters = "xyzw";
        const auto k = letters.find(c);
        require(k != std::string::npos, ErrorCode::ParseError, std::string("unknown variable '") + c + "'");
        index = static_cast<int>(k);
      }
      require(index >= 0 && index < n_, ErrorCode::ParseError, "variable index out of range");
      return Poly<F>::variable(f_, n_, index);
    }
    fail(ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
  }

  const F& f_;
  int n_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses sums of products of integers, variables, powers and parentheses, e.g. "4x^2 + z^2 - (x - y)^3".
template <class F>
Poly<F> parse_poly(const F& f, int nvars, const std::string& text) {
  return detail::PolyParser<F>(f, nvars, text).parse();
}

}  // namespace cherednik
