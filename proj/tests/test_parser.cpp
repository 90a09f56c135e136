#include <doctest.h>

#include <random>

#include "galois/parser.hpp"

using namespace galois;

namespace {

RatPolynomial rp(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long x : descending) c.emplace_back(x);
  return RatPolynomial::from_descending(c);
}

std::size_t error_offset(const std::string& text) {
  try {
    parse_polynomial(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("basic forms") {
  CHECK(parse_polynomial("x^2 - 2") == rp({1, 0, -2}));
  CHECK(parse_polynomial("x^4+x^3+x^2+x+1") == rp({1, 1, 1, 1, 1}));
  CHECK(parse_polynomial("3x^2 - 1") == rp({3, 0, -1}));
  CHECK(parse_polynomial("2(x+1)") == rp({2, 2}));
  CHECK(parse_polynomial("(x - 1)(x + 1)") == rp({1, 0, -1}));
  CHECK(parse_polynomial("(x^2-2)*(x^2-3)") == rp({1, 0, -5, 0, 6}));
  CHECK(parse_polynomial("-x") == rp({-1, 0}));
  CHECK(parse_polynomial("--x") == rp({1, 0}));
  CHECK(parse_polynomial("x^0") == rp({1}));
  CHECK(parse_polynomial("(x+1)^3") == rp({1, 3, 3, 1}));
  CHECK(parse_polynomial("  x ^ 2\t- 2 ") == rp({1, 0, -2}));
  CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("rational coefficients") {
  RatPolynomial p = parse_polynomial("x^2 + x/2 + 1/4");
  CHECK(p == RatPolynomial({make_rational(1, 4), make_rational(1, 2), Rational(1)}));
  CHECK(parse_polynomial("(1/2)x + 3") == RatPolynomial({Rational(3), make_rational(1, 2)}));
  CHECK(parse_polynomial("x/(2/3)") == RatPolynomial({Rational(0), make_rational(3, 2)}));
}

TEST_CASE("errors carry offsets") {
  CHECK(error_offset("x^^2") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("x +") == 3);
  CHECK(error_offset("y") == 0);
  CHECK(error_offset("x^2^3") == 3);
  CHECK(error_offset("(x+1") == 4);
  CHECK(error_offset("1/x") == 1);
  CHECK(error_offset("x/0") == 1);
  CHECK(error_offset("x^-1") == 2);
  CHECK(error_offset("x^99999") != std::string::npos);
  CHECK(error_offset("x 2") != std::string::npos);
  try {
    parse_polynomial("x^^2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("printing round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int deg = static_cast<int>(rng() % 7);
    std::vector<Rational> c(deg + 1);
    for (auto& q : c) {
      long num = static_cast<long>(rng() % 41) - 20;
      long den = static_cast<long>(rng() % 6) + 1;
      q = make_rational(num, den);
    }
    RatPolynomial p(c);
    CAPTURE(to_string(p));
    CHECK(parse_polynomial(to_string(p)) == p);
  }
}
