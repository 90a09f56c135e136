#ifndef GALOIS_BALL_HPP
#define GALOIS_BALL_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois {

/// RAII handle for an MPFR number.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t v_;
};

/// Radii are kept at this many bits and always rounded upward.
inline constexpr mpfr_prec_t kRadiusBits = 64;

/// Complex midpoint (re, im) at working precision plus a radius that bounds
/// the distance from the midpoint to the true value, including every rounding
/// made while computing the midpoint.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128);

  static ComplexBall exact(const Integer& value, mpfr_prec_t prec);
  static ComplexBall exact(const Rational& value, mpfr_prec_t prec);
  /// Midpoint given by two reals (rounded to prec), radius r.
  static ComplexBall from_parts(const Real& re, const Real& im, const Real& rad, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return re_.prec(); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  const Real& rad() const { return rad_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  Real& rad() { return rad_; }

  /// Upper bound on |z| over the ball.
  Real mag_upper() const;
  /// Lower bound on |z| over the ball (0 if the ball contains 0).
  Real mag_lower() const;
  /// Certified: 0 is not in the ball.
  bool excludes_zero() const;

  ComplexBall conj() const;
  ComplexBall operator-() const;
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
  ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }

  /// Grow the radius by r (rounded up).
  void inflate(const Real& r);

  std::string to_string(int digits = 20) const;

 private:
  Real re_, im_, rad_;
};

/// Certified: the two balls share no point.
bool certainly_disjoint(const ComplexBall& a, const ComplexBall& b);

enum class IntegerCertificate { Integer, NotInteger, Inconclusive };

struct IntegerCheck {
  IntegerCertificate status;
  Integer value;  // valid when status == Integer
};

/// Classify a ball whose true value is expected to be a rational integer.
/// Integer: radius < 1/2 and the ball meets exactly one integer on the real
/// axis.  NotInteger: provably no integer in the ball.  Inconclusive: the
/// radius is too large to decide.
IntegerCheck certify_integer(const ComplexBall& b);

/// Ball polynomial, ascending coefficients.
using BallPolynomial = std::vector<ComplexBall>;

/// Exact coefficients evaluated at a ball (Horner in ball arithmetic).
ComplexBall evaluate(const IntPolynomial& p, const ComplexBall& z);
ComplexBall evaluate(const RatPolynomial& p, const ComplexBall& z);

/// Multiply in place by (v - root).
void multiply_linear(BallPolynomial& poly, const ComplexBall& root);

/// Round every coefficient; nullopt-style status via the returned check list.
struct RoundedPolynomial {
  IntegerCertificate status;  // worst status over all coefficients
  IntPolynomial poly;         // meaningful only when status == Integer
};
RoundedPolynomial round_to_integers(const BallPolynomial& poly);

/// 2^e as a radius-precision real.
Real pow2(long e);

}  // namespace galois

#endif  // GALOIS_BALL_HPP
