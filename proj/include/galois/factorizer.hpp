#ifndef GALOIS_FACTORIZER_HPP
#define GALOIS_FACTORIZER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "galois/permutation.hpp"
#include "galois/roots.hpp"

namespace galois {

struct FactorOptions {
  /// labels[i] is the arrangement sigma with roots_V[i] = sum_k n_k x_{sigma(k)}.
  /// When present, candidate root sets are the cosets H * labels[v1_index] for
  /// subgroups H of S_n; the plain subset enumeration is the fallback.
  std::optional<std::vector<Permutation>> labels;
  /// f is known to be irreducible, so only multiples of n are tried first.
  bool f_irreducible = false;
  /// Degree of f (needed for pruning); 0 means "derive from deg F = n!".
  std::size_t n = 0;
  PrecisionPolicy policy;
  bool parallel = true;
  /// Recomputes the roots of F at a higher precision without reordering.
  /// Defaults to refine(roots_V, bits).
  std::function<RootSet(mpfr_prec_t)> refine_roots;
};

struct FactorResult {
  IntPolynomial G;
  std::vector<std::size_t> subset;  // sorted indices into roots_V
  RootSet roots_V;                  // roots at the precision that certified G
  bool used_fallback = false;
};

/// Minimal polynomial of roots_V[v1_index] over Q, found as the exact
/// divisor of F with the fewest roots.  Throws PrecisionExhausted,
/// InternalError.
FactorResult irreducible_factor_containing(const IntPolynomial& F, const RootSet& roots_V, std::size_t v1_index,
                                           const FactorOptions& options = {});

/// Subset sizes worth testing for a factor of the degree-n! resolvent.
std::vector<std::size_t> subset_pruning_bounds(std::size_t n, bool irreducible);

/// Exact irreducibility test for a squarefree monic integer polynomial by
/// recombination of its certified roots.  Throws PrecisionExhausted.
bool certify_irreducible(const IntPolynomial& f, const PrecisionPolicy& policy = {});

/// Monic irreducible factors of a squarefree monic integer polynomial,
/// together with the root indices each one owns.
struct RootFactor {
  IntPolynomial factor;
  std::vector<std::size_t> roots;
};
std::vector<RootFactor> factor_by_roots(const IntPolynomial& f, const PrecisionPolicy& policy = {});

}  // namespace galois

#endif  // GALOIS_FACTORIZER_HPP
