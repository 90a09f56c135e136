#ifndef GALOIS_PARSER_HPP
#define GALOIS_PARSER_HPP

#include <string_view>

#include "galois/polynomial.hpp"

namespace galois {

/// Polynomial in x over Q.  Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary | implicit)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'x' | '(' expr ')'
///
/// Implicit multiplication applies when a factor is followed by 'x' or '('
/// ("3x^2", "2(x+1)").  Division is only by nonzero constants, so "x/2" and
/// "3/4" are allowed.  Whitespace is ignored.  Throws ParseError carrying
/// the character offset.
RatPolynomial parse_polynomial(std::string_view text);

}  // namespace galois

#endif  // GALOIS_PARSER_HPP
