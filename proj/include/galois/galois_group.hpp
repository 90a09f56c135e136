#ifndef GALOIS_GALOIS_GROUP_HPP
#define GALOIS_GALOIS_GROUP_HPP

#include <string>
#include <vector>

#include "galois/resolvent.hpp"

namespace galois {

/// Row i of the substitution scheme: R_k(V_i) = x_{mapping(k)}.
struct Substitution {
  Permutation mapping;
  std::size_t source_row = 0;  // index into ResolventData::roots_V
};

struct SubstitutionGroup {
  std::vector<Substitution> elements;             // elements[0] is the identity
  std::vector<std::vector<std::size_t>> cayley;   // cayley[a][b]: sigma_a * sigma_b
  std::vector<FieldElement> root_embeddings;      // P_i = sum_k n_k R_{sigma_i(k)}

  std::size_t order() const { return elements.size(); }
  std::size_t degree() const { return elements.empty() ? 0 : elements.front().mapping.size(); }
  std::vector<Permutation> permutations() const;
  /// Index of the element with this mapping, or order() if absent.
  std::size_t find(const Permutation& p) const;
};

/// One substitution per root of G, matched numerically and certified
/// exactly.  Escalates precision on ambiguous matches.  Throws
/// MatchAmbiguous, CertificateFailed, PrecisionExhausted.
SubstitutionGroup extract_substitutions(const ResolventData& rd, const PrecisionPolicy& policy = {});

/// Fills g.cayley.  Throws ClosureFailed.
const std::vector<std::vector<std::size_t>>& certify_closure(SubstitutionGroup& g);

struct GroupIdentity {
  std::string name;
  std::size_t order = 0;
  bool transitive = false;
  std::vector<std::vector<std::size_t>> orbits;  // 0-based points
};

/// Name of a permutation group of degree n <= 5 given as its element list.
/// Throws UnrecognizedOrder.
GroupIdentity identify_permutation_group(const std::vector<Permutation>& elements, std::size_t n);

/// Identification plus the discriminant cross-check (all elements even iff
/// disc(f) is a square).  Throws UnrecognizedOrder, CertificateFailed.
GroupIdentity identify_group(const SubstitutionGroup& g, bool disc_square);

bool discriminant_is_square(const IntPolynomial& f);

}  // namespace galois

#endif  // GALOIS_GALOIS_GROUP_HPP
