#include <doctest.h>

#include <cmath>

#include "galois/ball.hpp"

using namespace galois;

namespace {

ComplexBall ball(double re, double im, double rad, mpfr_prec_t prec = 128) {
  Real r(prec), i(prec), d(kRadiusBits);
  mpfr_set_d(r.get(), re, MPFR_RNDN);
  mpfr_set_d(i.get(), im, MPFR_RNDN);
  mpfr_set_d(d.get(), rad, MPFR_RNDU);
  return ComplexBall::from_parts(r, i, d, prec);
}

}  // namespace

TEST_CASE("exact balls have zero radius") {
  ComplexBall a = ComplexBall::exact(Integer(5), 128);
  CHECK(mpfr_zero_p(a.rad().get()));
  ComplexBall b = ComplexBall::exact(make_rational(1, 3), 128);
  CHECK(mpfr_cmp_d(b.rad().get(), 0) > 0);  // 1/3 is not representable
  CHECK(mpfr_cmp_d(b.rad().get(), std::ldexp(1.0, -120)) < 0);
}

TEST_CASE("arithmetic encloses the exact result") {
  // (1/3) * 3 must contain 1; (1/3 + 2/3) must contain 1.
  ComplexBall third = ComplexBall::exact(make_rational(1, 3), 64);
  ComplexBall one = ComplexBall::exact(Integer(1), 64);
  ComplexBall p = third * ComplexBall::exact(Integer(3), 64);
  CHECK_FALSE(certainly_disjoint(p, one));
  ComplexBall s = third + ComplexBall::exact(make_rational(2, 3), 64);
  CHECK_FALSE(certainly_disjoint(s, one));

  // Repeated squaring of (1 + 1e-10) against the exact binomial value.
  ComplexBall z = ComplexBall::exact(make_rational(10000000001, 10000000000), 200);
  for (int k = 0; k < 5; ++k) z = z * z;
  Rational exact = make_rational(10000000001, 10000000000);
  for (int k = 0; k < 5; ++k) exact = exact * exact;
  CHECK_FALSE(certainly_disjoint(z, ComplexBall::exact(exact, 400)));
}

TEST_CASE("complex multiplication") {
  // (1 + 2i)(3 - i) = 5 + 5i
  ComplexBall a = ball(1, 2, 0), b = ball(3, -1, 0);
  ComplexBall c = a * b;
  CHECK(mpfr_cmp_d(c.re().get(), 5) == 0);
  CHECK(mpfr_cmp_d(c.im().get(), 5) == 0);
  CHECK(mpfr_zero_p(c.rad().get()));
}

TEST_CASE("disjointness") {
  CHECK(certainly_disjoint(ball(1.414, 0, 1e-6), ball(-1.414, 0, 1e-6)));
  CHECK_FALSE(certainly_disjoint(ball(0, 0, 1e-9), ball(0, 0, 1e-9)));
  CHECK_FALSE(certainly_disjoint(ball(0, 0, 0.6), ball(1, 0, 0.6)));
}

TEST_CASE("integer certificate") {
  CHECK(certify_integer(ball(3.0000001, 0, 1e-3)).status == IntegerCertificate::Integer);
  CHECK(certify_integer(ball(3.0000001, 0, 1e-3)).value == 3);
  CHECK(certify_integer(ball(-7, 1e-9, 1e-6)).value == -7);
  CHECK(certify_integer(ball(2.5, 0, 1e-3)).status == IntegerCertificate::NotInteger);
  CHECK(certify_integer(ball(3, 0.5, 1e-3)).status == IntegerCertificate::NotInteger);
  CHECK(certify_integer(ball(3, 0, 0.75)).status == IntegerCertificate::Inconclusive);
}

TEST_CASE("ball polynomials") {
  // (v - 1)(v - 2)(v + 3) = v^3 - 7v + 6
  BallPolynomial p{ComplexBall::exact(Integer(1), 128)};
  for (long r : {1, 2, -3}) multiply_linear(p, ComplexBall::exact(Integer(r), 128));
  RoundedPolynomial q = round_to_integers(p);
  REQUIRE(q.status == IntegerCertificate::Integer);
  CHECK(q.poly == IntPolynomial::from_descending({1, 0, -7, 6}));

  ComplexBall v = evaluate(q.poly, ComplexBall::exact(Integer(4), 128));
  CHECK(certify_integer(v).value == 42);
}
