#ifndef GALOIS_POLYNOMIAL_HPP
#define GALOIS_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois/error.hpp"
#include "galois/rational.hpp"

namespace galois {

/// Dense univariate polynomial, coefficients stored by ascending degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and two polynomials are equal iff their vectors are equal.
template <class T>
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.  Never a valid degree.
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) {
    trim();
  }
  Polynomial(std::initializer_list<T> ascending) : c_(ascending) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial({value}); }
  static Polynomial monomial(const T& value, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = value;
    return Polynomial(std::move(c));
  }
  /// x - root
  static Polynomial linear(const T& root) { return Polynomial({T(-root), T(1)}); }
  static Polynomial from_descending(std::vector<T> descending) {
    return Polynomial(std::vector<T>(descending.rbegin(), descending.rend()));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& leading() const { return c_.back(); }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const std::vector<T>& coefficients() const { return c_; }
  std::vector<T> descending() const {
    return std::vector<T>(c_.rbegin(), c_.rend());
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(r));
  }

  /// Horner evaluation in any ring U that accepts T coefficients.
  template <class U>
  U evaluate(const U& x) const {
    U acc = U(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + U(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

template <class P>
struct DivMod {
  P quotient;
  P remainder;
};

RatPolynomial to_rational(const IntPolynomial& p);
/// Integer view of a rational polynomial; nullopt if a coefficient is not integral.
std::optional<IntPolynomial> to_integer(const RatPolynomial& p);

/// a = q*b + r with deg r < deg b.  Throws DivisionByZeroPolynomial.
DivMod<RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Division by a monic integer polynomial stays in Z[x].
DivMod<IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// True iff `divisor` (monic) divides `f` with zero remainder.
bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& f);

RatPolynomial make_monic(const RatPolynomial& p);

/// Monic gcd; gcd(a, 0) = monic(a).  Throws BothZero when a = b = 0.
RatPolynomial poly_gcd(const RatPolynomial& a, const RatPolynomial& b);

struct ExtendedGcd {
  RatPolynomial gcd;  // monic
  RatPolynomial s;    // s*a + t*b = gcd
  RatPolynomial t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

bool is_squarefree(const RatPolynomial& p);
inline bool is_squarefree(const IntPolynomial& p) { return is_squarefree(to_rational(p)); }

/// p / gcd(p, p'), monic.
RatPolynomial squarefree_part(const RatPolynomial& p);

/// Power sums p_0..p_count of the roots of a monic polynomial, by Newton's
/// identities on its coefficients.  p_0 = deg g.  Throws NonMonicInput.
std::vector<Rational> power_sums(const IntPolynomial& g, std::size_t count);

/// Sylvester-matrix resultant (fraction-free elimination).
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Integer discriminant(const IntPolynomial& f);

/// Human readable, reparseable form: "x^4 - 10x^2 + 1", "(1/2)x + 3".
std::string to_string(const RatPolynomial& p, char var = 'x');
std::string to_string(const IntPolynomial& p, char var = 'x');

}  // namespace galois

#endif  // GALOIS_POLYNOMIAL_HPP
