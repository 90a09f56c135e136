#ifndef GALOIS_FIELD_ELEMENT_HPP
#define GALOIS_FIELD_ELEMENT_HPP

#include <cstdint>
#include <memory>

#include "galois/polynomial.hpp"

namespace galois {

/// A monic integer polynomial G(v) defining the quotient ring Q[v]/(G).
class Modulus {
 public:
  explicit Modulus(IntPolynomial g);

  const IntPolynomial& poly() const { return g_; }
  int degree() const { return g_.degree(); }
  std::uint64_t id() const { return id_; }

 private:
  IntPolynomial g_;
  std::uint64_t id_;
};

using ModulusPtr = std::shared_ptr<const Modulus>;

ModulusPtr make_modulus(IntPolynomial g);

/// Residue class of Q[v] modulo G(v).
///
/// Stored as numerator/denominator with an integer numerator polynomial of
/// degree < deg G, so products reduce modulo the monic G without leaving Z[v].
class FieldElement {
 public:
  FieldElement(ModulusPtr modulus, const RatPolynomial& residue);

  static FieldElement constant(ModulusPtr modulus, const Rational& value);
  /// The class of v itself.
  static FieldElement generator(ModulusPtr modulus);

  RatPolynomial residue() const;
  const ModulusPtr& modulus() const { return mod_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0; }
  /// Value of a constant residue; throws InternalError otherwise.
  Rational constant_value() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& s);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement pow(unsigned long e) const;

  std::string to_string(char var = 'v') const { return galois::to_string(residue(), var); }

 private:
  FieldElement(ModulusPtr modulus, IntPolynomial num, Integer den);
  void normalize();
  void check_same(const FieldElement& o) const;

  ModulusPtr mod_;
  IntPolynomial num_;
  Integer den_ = 1;
};

/// Inverse modulo G.  Throws NotInvertible when gcd(residue, G) != 1.
FieldElement mod_inverse(const FieldElement& a);

/// outer(inner) reduced modulo G (Horner).
FieldElement poly_compose_mod(const RatPolynomial& outer, const FieldElement& inner);

}  // namespace galois

#endif  // GALOIS_FIELD_ELEMENT_HPP
