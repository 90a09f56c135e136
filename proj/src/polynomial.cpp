#include "galois/polynomial.hpp"

#include <sstream>

namespace galois {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonMonicInput: return "NonMonicInput";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::MatchAmbiguous: return "MatchAmbiguous";
    case ErrorCode::ClosureFailed: return "ClosureFailed";
    case ErrorCode::UnrecognizedOrder: return "UnrecognizedOrder";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::DegenerateTheta: return "DegenerateTheta";
    case ErrorCode::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidSubgroup:
    case ErrorCode::NotSquarefree:
      return 1;
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::SearchExhausted:
    case ErrorCode::MatchAmbiguous:
      return 2;
    default:
      return 3;
  }
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& z : p.coefficients()) c.emplace_back(z);
  return RatPolynomial(std::move(c));
}

std::optional<IntPolynomial> to_integer(const RatPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) {
    if (q.get_den() != 1) return std::nullopt;
    c.push_back(q.get_num());
  }
  return IntPolynomial(std::move(c));
}

DivMod<RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "divisor is the zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db);
  const Rational inv_lead = 1 / bc.back();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rational t = r[i] * inv_lead;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

DivMod<IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "divisor is the zero polynomial");
  if (monic.leading() != 1) throw Error(ErrorCode::NonMonicInput, "integer division needs a monic divisor");
  if (a.degree() < monic.degree()) return {IntPolynomial(), a};
  std::vector<Integer> r = a.coefficients();
  const auto& bc = monic.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Integer t = r[i];
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& f) {
  return divmod_monic(f, divisor).remainder.is_zero();
}

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

RatPolynomial poly_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  RatPolynomial x = make_monic(a), y = make_monic(b);
  while (!y.is_zero()) {
    RatPolynomial r = make_monic(divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    RatPolynomial s2 = s0 - qr.quotient * s1;
    RatPolynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const RatPolynomial& p) {
  if (p.degree() <= 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return make_monic(p);
  return make_monic(divmod(p, poly_gcd(p, p.derivative())).quotient);
}

std::vector<Rational> power_sums(const IntPolynomial& g, std::size_t count) {
  if (g.degree() < 1) throw Error(ErrorCode::NonMonicInput, "power sums need degree >= 1");
  if (g.leading() != 1) throw Error(ErrorCode::NonMonicInput, "power sums need a monic polynomial");
  const std::size_t m = static_cast<std::size_t>(g.degree());
  // g = v^m + e[1] v^(m-1) + ... + e[m]
  std::vector<Integer> e(m + 1);
  for (std::size_t i = 0; i <= m; ++i) e[i] = g.coeff(m - i);
  std::vector<Integer> p(count + 1);
  p[0] = static_cast<unsigned long>(m);
  for (std::size_t k = 1; k <= count; ++k) {
    Integer acc = 0;
    const std::size_t top = std::min(k - 1, m);
    for (std::size_t i = 1; i <= top; ++i) acc += e[i] * p[k - i];
    if (k <= m) acc += e[k] * static_cast<unsigned long>(k);
    p[k] = -acc;
  }
  return std::vector<Rational>(p.begin(), p.end());
}

Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const std::size_t m = a.degree(), n = b.degree();
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> mat(size, std::vector<Integer>(size, 0));
  const auto da = a.descending(), dbv = b.descending();
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t j = 0; j <= m; ++j) mat[row][row + j] = da[j];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) mat[n + row][row + j] = dbv[j];

  // Bareiss fraction-free elimination.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < size && mat[swap][k] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(mat[k], mat[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mat[i][j] = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), mat[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = mat[k][k];
  }
  Integer det = mat[size - 1][size - 1];
  return sign > 0 ? det : Integer(-det);
}

Integer discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidInput, "discriminant of a constant");
  Integer res = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

namespace {

template <class T>
std::string format_poly(const std::vector<T>& c, char var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    T mag = abs(c[i]);
    const bool negative = sgn(c[i]) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string text = mag.get_str();
    const bool integral = text.find('/') == std::string::npos;
    if (i == 0) {
      os << text;
      continue;
    }
    if (mag != 1) {
      if (integral)
        os << text;
      else
        os << '(' << text << ')';
    }
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const RatPolynomial& p, char var) {
  return format_poly(p.coefficients(), var);
}

std::string to_string(const IntPolynomial& p, char var) {
  return format_poly(p.coefficients(), var);
}

}  // namespace galois
