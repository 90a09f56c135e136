#ifndef GALOIS_RESOLVENT_HPP
#define GALOIS_RESOLVENT_HPP

#include <vector>

#include "galois/field_element.hpp"
#include "galois/permutation.hpp"
#include "galois/roots.hpp"

namespace galois {

/// Integer weights n_1..n_n of the linear form V = n_1 x_1 + ... + n_n x_n.
struct WeightTuple {
  std::vector<Integer> values;

  std::size_t size() const { return values.size(); }
  const Integer& operator[](std::size_t k) const { return values[k]; }
  friend bool operator==(const WeightTuple&, const WeightTuple&) = default;
};

struct NormalizedPolynomial {
  IntPolynomial poly;  // monic, integer coefficients
  Integer scale;       // roots of poly are scale * (roots of the input)
};

/// g(y) = c^n f(y/c) / lead(f) with the least positive integer c that makes
/// g monic integral.
NormalizedPolynomial normalize_monic_integral(const RatPolynomial& f);

struct WeightSearchOptions {
  long max_weight = 64;
  mpfr_prec_t max_bits = PrecisionPolicy{}.max_bits;
  bool parallel = true;
};

/// First weight tuple (see candidate order below) whose n! weighted sums
/// are certifiably pairwise distinct.  Candidates: (1, 2, ..., n) first,
/// then tuples of distinct positive integers ordered by their largest entry
/// and lexicographically within that.  Throws SearchExhausted.
WeightTuple choose_weights(const RootSet& roots, const WeightSearchOptions& options = {});

/// The n! weighted sums as balls, indexed like all_permutations(n).
std::vector<ComplexBall> weighted_sum_balls(const RootSet& roots, const WeightTuple& w, bool parallel = true);

/// Exact resolvent F(v) = prod_sigma (v - V_sigma) together with the root
/// balls it was expanded from (refined to the precision that certified it).
struct ResolventExpansion {
  IntPolynomial F;
  RootSet roots_f;  // roots of f at the certifying precision
  RootSet roots_V;  // roots of F, indexed like all_permutations(n)
};

/// Throws PrecisionExhausted, CertificateFailed (F not squarefree).
ResolventExpansion expand_resolvent(const RootSet& roots, const WeightTuple& w,
                                    const PrecisionPolicy& policy = {}, bool parallel = true);

inline IntPolynomial build_resolvent_F(const RootSet& roots, const WeightTuple& w,
                                       const PrecisionPolicy& policy = {}, bool parallel = true) {
  return expand_resolvent(roots, w, policy, parallel).F;
}

/// H_k(v) = sum_sigma x_{sigma(k)} prod_{tau != sigma}(v - V_tau), so that
/// x_{sigma(k)} = H_k(V_sigma) / F'(V_sigma).  Throws PrecisionExhausted.
std::vector<IntPolynomial> build_lagrange_numerators(const RootSet& roots, const WeightTuple& w,
                                                     const IntPolynomial& F,
                                                     const PrecisionPolicy& policy = {},
                                                     bool parallel = true);

/// R_k = H_k / F' modulo G, with the exact certificates f(R_k) = 0,
/// sum_k n_k R_k = v and pairwise distinct R_k.  Throws CertificateFailed.
std::vector<FieldElement> root_expressions(const IntPolynomial& F, const ModulusPtr& G,
                                           const std::vector<IntPolynomial>& H, const WeightTuple& w,
                                           const IntPolynomial& f);

/// Everything the group and fixed-field stages need.
struct ResolventData {
  IntPolynomial f;  // monic integral, squarefree
  Integer scale = 1;
  WeightTuple weights;
  IntPolynomial F;
  RootSet roots_f;
  RootSet roots_V;
  std::vector<Permutation> labels;  // labels[i] is the arrangement behind roots_V[i]
  IntPolynomial G;
  ModulusPtr modulus;
  std::vector<std::size_t> subset;  // indices into roots_V of the roots of G
  std::vector<IntPolynomial> H;
  std::vector<FieldElement> R;
  bool f_irreducible = true;

  std::size_t degree() const { return static_cast<std::size_t>(f.degree()); }
  std::size_t m() const { return static_cast<std::size_t>(G.degree()); }
};

}  // namespace galois

#endif  // GALOIS_RESOLVENT_HPP
