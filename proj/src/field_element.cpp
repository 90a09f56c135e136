#include "galois/field_element.hpp"

#include <atomic>

namespace galois {

namespace {

std::atomic<std::uint64_t> next_modulus_id{1};

IntPolynomial scaled(const IntPolynomial& p, const Integer& s) {
  if (s == 1) return p;
  return p * s;
}

}  // namespace

Modulus::Modulus(IntPolynomial g) : g_(std::move(g)), id_(next_modulus_id++) {
  if (g_.degree() < 1 || g_.leading() != 1)
    throw Error(ErrorCode::NonMonicInput, "modulus must be monic of degree >= 1");
}

ModulusPtr make_modulus(IntPolynomial g) {
  return std::make_shared<const Modulus>(std::move(g));
}

FieldElement::FieldElement(ModulusPtr modulus, IntPolynomial num, Integer den)
    : mod_(std::move(modulus)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

FieldElement::FieldElement(ModulusPtr modulus, const RatPolynomial& residue)
    : mod_(std::move(modulus)) {
  Integer den = 1;
  for (const auto& q : residue.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> num;
  num.reserve(residue.coefficients().size());
  for (const auto& q : residue.coefficients()) num.push_back(q.get_num() * (den / q.get_den()));
  num_ = divmod_monic(IntPolynomial(std::move(num)), mod_->poly()).remainder;
  den_ = den;
  normalize();
}

FieldElement FieldElement::constant(ModulusPtr modulus, const Rational& value) {
  return FieldElement(std::move(modulus), IntPolynomial::constant(value.get_num()), value.get_den());
}

FieldElement FieldElement::generator(ModulusPtr modulus) {
  return FieldElement(std::move(modulus), RatPolynomial({Rational(0), Rational(1)}));
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (sgn(den_) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Integer g = den_;
  for (const auto& c : num_.coefficients()) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    std::vector<Integer> c = num_.coefficients();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    num_ = IntPolynomial(std::move(c));
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (mod_ != o.mod_ && mod_->id() != o.mod_->id())
    throw Error(ErrorCode::ModulusMismatch, "field elements live in different quotient rings");
}

RatPolynomial FieldElement::residue() const {
  std::vector<Rational> c;
  c.reserve(num_.coefficients().size());
  for (const auto& z : num_.coefficients()) c.push_back(make_rational(z, den_));
  return RatPolynomial(std::move(c));
}

Rational FieldElement::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InternalError, "residue is not constant");
  return make_rational(num_.coeff(0), den_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(mod_, -num_, den_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = scaled(num_, o.den_) + scaled(o.num_, den_);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  num_ = divmod_monic(num_ * o.num_, mod_->poly()).remainder;
  den_ *= o.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
  num_ *= s.get_num();
  den_ *= s.get_den();
  normalize();
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = constant(mod_, 1);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElement mod_inverse(const FieldElement& a) {
  const RatPolynomial g = to_rational(a.modulus()->poly());
  const RatPolynomial r = a.residue();
  if (r.is_zero()) throw Error(ErrorCode::NotInvertible, "zero has no inverse");
  ExtendedGcd eg = extended_gcd(r, g);
  if (eg.gcd.degree() != 0)
    throw Error(ErrorCode::NotInvertible,
                "residue shares the factor " + to_string(eg.gcd, 'v') + " with the modulus");
  return FieldElement(a.modulus(), eg.s);
}

FieldElement poly_compose_mod(const RatPolynomial& outer, const FieldElement& inner) {
  const auto& c = outer.coefficients();
  FieldElement acc = FieldElement::constant(inner.modulus(), 0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += FieldElement::constant(inner.modulus(), *it);
  }
  return acc;
}

}  // namespace galois
