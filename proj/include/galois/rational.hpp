#ifndef GALOIS_RATIONAL_HPP
#define GALOIS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace galois {

using Integer = mpz_class;

// mpq_class keeps results of arithmetic in lowest terms with a positive
// denominator; only direct construction from a numerator/denominator pair
// needs an explicit canonicalize, which make_rational does.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace galois

#endif  // GALOIS_RATIONAL_HPP
