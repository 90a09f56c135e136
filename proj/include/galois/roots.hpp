#ifndef GALOIS_ROOTS_HPP
#define GALOIS_ROOTS_HPP

#include <span>
#include <vector>

#include "galois/ball.hpp"

namespace galois {

struct PrecisionPolicy {
  mpfr_prec_t initial_bits = 128;
  mpfr_prec_t max_bits = 16384;
};

/// Certified isolation of all complex roots of a squarefree integer
/// polynomial: one pairwise-disjoint ball per root.
struct RootSet {
  IntPolynomial polynomial;
  std::vector<ComplexBall> balls;
  mpfr_prec_t precision_bits = 0;

  std::size_t size() const { return balls.size(); }
  const ComplexBall& operator[](std::size_t i) const { return balls[i]; }
};

/// Balls are ordered by (real part, imaginary part) of their midpoints;
/// real roots get an exactly zero imaginary midpoint and conjugate roots
/// get exactly conjugate balls.  Escalates precision (doubling) up to
/// max_bits.  Throws NotSquarefree, PrecisionExhausted.
RootSet isolate_roots(const IntPolynomial& f, mpfr_prec_t precision_bits,
                      mpfr_prec_t max_bits = PrecisionPolicy{}.max_bits);

/// Same roots, same order, radii no larger than before.
RootSet refine(const RootSet& rs, mpfr_prec_t precision_bits,
               mpfr_prec_t max_bits = PrecisionPolicy{}.max_bits);

/// True only if every pair of balls is certifiably disjoint.
bool certified_distinct(std::span<const ComplexBall> values);

}  // namespace galois

#endif  // GALOIS_ROOTS_HPP
