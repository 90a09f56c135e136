#include "galois/parser.hpp"

#include <cctype>

namespace galois {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RatPolynomial parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "expected expression, found end of input");
    RatPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RatPolynomial expr() {
    RatPolynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatPolynomial term() {
    RatPolynomial acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        RatPolynomial d = unary();
        if (!d.is_constant() || d.is_zero())
          throw ParseError(at, d.is_zero() ? "division by zero" : "division by a non-constant polynomial");
        acc = acc * Rational(1 / d.coeff(0));
      } else if (peek('x') || peek('(')) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RatPolynomial unary() {
    if (peek('-')) {
      ++pos_;
      return RatPolynomial() - unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatPolynomial power() {
    RatPolynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(at, "expected a nonnegative integer exponent");
    const Integer e = integer();
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    if (peek('^')) throw ParseError(pos_, "chained exponents need parentheses");
    RatPolynomial r = RatPolynomial::constant(1);
    for (unsigned long k = 0; k < e.get_ui(); ++k) r = r * base;
    return r;
  }

  RatPolynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "expected a number, 'x' or '(', found end of input");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return RatPolynomial::monomial(Rational(1), 1);
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      RatPolynomial inner = expr();
      if (!peek(')')) throw ParseError(pos_ < s_.size() ? pos_ : s_.size(), "expected ')' to close '(' at offset " +
                                                                             std::to_string(open));
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatPolynomial::constant(Rational(integer()));
    throw ParseError(pos_, std::string("expected a number, 'x' or '(', found '") + c + "'");
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace galois
