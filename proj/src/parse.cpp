#include "polylog/ratfunc.hpp"

#include <cctype>

namespace polylog {

namespace {

class Parser {
 public:
  Parser(std::string_view s, int limit) : s_(s), limit_(limit) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at " + std::to_string(pos_) + ": " + msg);
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

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc b = primary();
    if (!eat('^')) return b;
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stol(digits) > limit_) fail("exponent exceeds limit " + std::to_string(limit_));
    long k = std::stol(digits);
    if (neg && b.is_zero()) fail("negative power of zero");
    return b.pow(neg ? -k : k);
  }

  RatFunc primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return RatFunc::variable(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int limit_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse(std::string_view text, int exponent_limit) { return Parser(text, exponent_limit).run(); }

}  // namespace polylog
