#include <doctest.h>

#include <cmath>
#include <complex>

#include "galois/roots.hpp"

using namespace galois;

namespace {

IntPolynomial ip(std::initializer_list<long> descending) {
  std::vector<Integer> c;
  for (long x : descending) c.emplace_back(x);
  return IntPolynomial::from_descending(c);
}

std::complex<double> mid(const ComplexBall& b) { return {b.re().to_double(), b.im().to_double()}; }

double radius(const ComplexBall& b) { return b.rad().to_double(); }

// Ball must contain re + i*im (both dyadic here, so exactly representable).
bool contains(const ComplexBall& b, const Rational& re, const Rational& im = 0) {
  Real r(kRadiusBits);
  mpfr_set_zero(r.get(), 1);
  ComplexBall point = ComplexBall::from_parts(ComplexBall::exact(re, 128).re(), ComplexBall::exact(im, 128).re(), r, 128);
  return !certainly_disjoint(b, point);
}

}  // namespace

TEST_CASE("square roots of two") {
  RootSet rs = isolate_roots(ip({1, 0, -2}), 64);
  REQUIRE(rs.size() == 2);
  CHECK(mid(rs[0]).real() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(mid(rs[1]).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(radius(rs[0]) <= std::ldexp(1.0, -50));
  CHECK(radius(rs[1]) <= std::ldexp(1.0, -50));
  CHECK(mpfr_zero_p(rs[0].im().get()));
}

TEST_CASE("exact rational root") {
  RootSet rs = isolate_roots(ip({1, 0}), 128);
  REQUIRE(rs.size() == 1);
  CHECK(mpfr_zero_p(rs[0].re().get()));
  CHECK(mpfr_zero_p(rs[0].im().get()));
  CHECK(mpfr_zero_p(rs[0].rad().get()));
}

TEST_CASE("repeated root rejected") {
  try {
    isolate_roots(ip({1, -2, 1}), 128);
    FAIL("expected NotSquarefree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquarefree);
  }
}

TEST_CASE("containment of known roots") {
  // (x - 1)(x + 2)(2x - 1)
  RootSet rs = isolate_roots(ip({2, 1, -5, 2}), 128);
  REQUIRE(rs.size() == 3);
  CHECK(contains(rs[0], -2));
  CHECK(contains(rs[1], make_rational(1, 2)));
  CHECK(contains(rs[2], 1));

  // x^2 + 1: -i before +i
  RootSet ri = isolate_roots(ip({1, 0, 1}), 128);
  CHECK(contains(ri[0], 0, -1));
  CHECK(contains(ri[1], 0, 1));
}

TEST_CASE("ordering and conjugate symmetry") {
  RootSet rs = isolate_roots(ip({1, 0, 0, -2}), 128);
  REQUIRE(rs.size() == 3);
  // Complex pair with real part -2^(1/3)/2 first, then the real root.
  CHECK(mid(rs[0]).imag() < 0);
  CHECK(mid(rs[1]).imag() > 0);
  CHECK(mpfr_equal_p(rs[0].re().get(), rs[1].re().get()));
  CHECK(mid(rs[0]).imag() == -mid(rs[1]).imag());
  CHECK(mpfr_zero_p(rs[2].im().get()));
  CHECK(mid(rs[2]).real() == doctest::Approx(std::cbrt(2.0)));

  RootSet again = isolate_roots(ip({1, 0, 0, -2}), 128);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(mpfr_equal_p(rs[i].re().get(), again[i].re().get()));
    CHECK(mpfr_equal_p(rs[i].im().get(), again[i].im().get()));
  }
}

TEST_CASE("refine keeps order and shrinks radii") {
  RootSet rs = isolate_roots(ip({1, 0, -2}), 64);
  RootSet same = refine(rs, 64);
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(radius(same[i]) <= radius(rs[i]));
  RootSet fine = refine(rs, 256);
  CHECK(fine.precision_bits == 256);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(radius(fine[i]) <= std::ldexp(1.0, -200));
    CHECK(!certainly_disjoint(fine[i], rs[i]));
  }

  RootSet cube = isolate_roots(ip({1, 0, 0, -2}), 128);
  RootSet cube_fine = refine(cube, 512);
  CHECK(mpfr_zero_p(cube_fine[2].im().get()));
}

TEST_CASE("certified distinctness") {
  RootSet rs = isolate_roots(ip({1, 0, -2}), 128);
  CHECK(certified_distinct(rs.balls));
  std::vector<ComplexBall> same{ComplexBall::exact(Integer(0), 64), ComplexBall::exact(Integer(0), 64)};
  CHECK_FALSE(certified_distinct(same));
}

TEST_CASE("all roots of a wider polynomial") {
  // Cyclotomic Phi_7: every root has modulus 1.
  RootSet rs = isolate_roots(ip({1, 1, 1, 1, 1, 1, 1}), 128);
  REQUIRE(rs.size() == 6);
  CHECK(certified_distinct(rs.balls));
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(std::abs(mid(rs[i])) == doctest::Approx(1.0));
  for (std::size_t i = 1; i < rs.size(); ++i) CHECK(mid(rs[i - 1]).real() <= mid(rs[i]).real());
}
