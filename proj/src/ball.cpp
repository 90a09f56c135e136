#include "galois/ball.hpp"

#include <algorithm>
#include <cstdio>

namespace galois {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  char buf[512];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
  return buf;
}

Real pow2(long e) {
  Real r(kRadiusBits);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDU);
  return r;
}

namespace {

// After an MPFR operation producing x with the given ternary value, add a
// bound on the rounding error (one ulp of x) to rad.
void add_rounding_error(Real& rad, const Real& x, int ternary) {
  if (ternary == 0 || mpfr_zero_p(x.get())) return;
  const long e = mpfr_get_exp(x.get()) - x.prec();
  Real ulp = pow2(e);
  mpfr_add(rad.get(), rad.get(), ulp.get(), MPFR_RNDU);
}

Real hypot_mid(const Real& re, const Real& im, mpfr_rnd_t rnd) {
  Real h(kRadiusBits);
  mpfr_hypot(h.get(), re.get(), im.get(), rnd);
  return h;
}

}  // namespace

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadiusBits) {}

ComplexBall ComplexBall::exact(const Integer& value, mpfr_prec_t prec) {
  ComplexBall b(prec);
  int t = mpfr_set_z(b.re_.get(), value.get_mpz_t(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.re_, t);
  return b;
}

ComplexBall ComplexBall::exact(const Rational& value, mpfr_prec_t prec) {
  ComplexBall b(prec);
  int t = mpfr_set_q(b.re_.get(), value.get_mpq_t(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.re_, t);
  return b;
}

ComplexBall ComplexBall::from_parts(const Real& re, const Real& im, const Real& rad, mpfr_prec_t prec) {
  ComplexBall b(prec);
  mpfr_set(b.rad_.get(), rad.get(), MPFR_RNDU);
  int t = mpfr_set(b.re_.get(), re.get(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.re_, t);
  t = mpfr_set(b.im_.get(), im.get(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.im_, t);
  return b;
}

Real ComplexBall::mag_upper() const {
  Real h = hypot_mid(re_, im_, MPFR_RNDU);
  mpfr_add(h.get(), h.get(), rad_.get(), MPFR_RNDU);
  return h;
}

Real ComplexBall::mag_lower() const {
  Real h = hypot_mid(re_, im_, MPFR_RNDD);
  mpfr_sub(h.get(), h.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(h.get()) < 0) mpfr_set_zero(h.get(), 1);
  return h;
}

bool ComplexBall::excludes_zero() const {
  Real h = hypot_mid(re_, im_, MPFR_RNDD);
  return mpfr_cmp(h.get(), rad_.get()) > 0;
}

ComplexBall ComplexBall::conj() const {
  ComplexBall b = *this;
  mpfr_neg(b.im_.get(), b.im_.get(), MPFR_RNDN);
  return b;
}

ComplexBall ComplexBall::operator-() const {
  ComplexBall b = *this;
  mpfr_neg(b.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_neg(b.im_.get(), b.im_.get(), MPFR_RNDN);
  return b;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  int t = mpfr_add(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  add_rounding_error(r.rad_, r.re_, t);
  t = mpfr_add(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  add_rounding_error(r.rad_, r.im_, t);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  int t = mpfr_sub(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  add_rounding_error(r.rad_, r.re_, t);
  t = mpfr_sub(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  add_rounding_error(r.rad_, r.im_, t);
  return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  // |xy - ab| <= |a| rb + |b| ra + ra rb for x in B(a, ra), y in B(b, rb).
  const bool a_exact = mpfr_zero_p(a.rad_.get());
  const bool b_exact = mpfr_zero_p(b.rad_.get());
  if (!b_exact) {
    Real ma = hypot_mid(a.re_, a.im_, MPFR_RNDU);
    mpfr_mul(ma.get(), ma.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), ma.get(), MPFR_RNDU);
  }
  if (!a_exact) {
    Real mb = hypot_mid(b.re_, b.im_, MPFR_RNDU);
    mpfr_mul(mb.get(), mb.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), mb.get(), MPFR_RNDU);
  }
  if (!a_exact && !b_exact) {
    Real rr(kRadiusBits);
    mpfr_mul(rr.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), rr.get(), MPFR_RNDU);
  }
  int t = mpfr_fmms(r.re_.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  add_rounding_error(r.rad_, r.re_, t);
  t = mpfr_fmma(r.im_.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  add_rounding_error(r.rad_, r.im_, t);
  return r;
}

void ComplexBall::inflate(const Real& r) {
  mpfr_add(rad_.get(), rad_.get(), r.get(), MPFR_RNDU);
}

std::string ComplexBall::to_string(int digits) const {
  return "[" + re_.to_string(digits) + " + " + im_.to_string(digits) + "i +/- " + rad_.to_string(4) + "]";
}

bool certainly_disjoint(const ComplexBall& a, const ComplexBall& b) {
  return (a - b).excludes_zero();
}

IntegerCheck certify_integer(const ComplexBall& b) {
  if (mpfr_cmpabs(b.im().get(), b.rad().get()) > 0) return {IntegerCertificate::NotInteger, 0};
  if (mpfr_cmp_d(b.rad().get(), 0.5) >= 0) return {IntegerCertificate::Inconclusive, 0};
  Integer n;
  mpfr_get_z(n.get_mpz_t(), b.re().get(), MPFR_RNDN);
  Real diff(b.prec() + 8);
  if (mpfr_sub_z(diff.get(), b.re().get(), n.get_mpz_t(), MPFR_RNDN) != 0)
    return {IntegerCertificate::Inconclusive, 0};
  if (mpfr_cmpabs(diff.get(), b.rad().get()) > 0) return {IntegerCertificate::NotInteger, 0};
  return {IntegerCertificate::Integer, n};
}

ComplexBall evaluate(const IntPolynomial& p, const ComplexBall& z) {
  ComplexBall acc(z.prec());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + ComplexBall::exact(*it, z.prec());
  return acc;
}

ComplexBall evaluate(const RatPolynomial& p, const ComplexBall& z) {
  ComplexBall acc(z.prec());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + ComplexBall::exact(*it, z.prec());
  return acc;
}

void multiply_linear(BallPolynomial& poly, const ComplexBall& root) {
  if (poly.empty()) return;
  const std::size_t n = poly.size();
  poly.push_back(poly[n - 1]);
  for (std::size_t i = n - 1; i >= 1; --i) poly[i] = poly[i - 1] - root * poly[i];
  poly[0] = -(root * poly[0]);
}

RoundedPolynomial round_to_integers(const BallPolynomial& poly) {
  std::vector<Integer> coeffs;
  coeffs.reserve(poly.size());
  IntegerCertificate worst = IntegerCertificate::Integer;
  for (const auto& c : poly) {
    IntegerCheck chk = certify_integer(c);
    if (chk.status == IntegerCertificate::NotInteger) return {IntegerCertificate::NotInteger, {}};
    if (chk.status == IntegerCertificate::Inconclusive) worst = IntegerCertificate::Inconclusive;
    coeffs.push_back(chk.value);
  }
  if (worst != IntegerCertificate::Integer) return {worst, {}};
  return {IntegerCertificate::Integer, IntPolynomial(std::move(coeffs))};
}

}  // namespace galois
