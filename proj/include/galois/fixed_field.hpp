#ifndef GALOIS_FIXED_FIELD_HPP
#define GALOIS_FIXED_FIELD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galois/galois_group.hpp"

namespace galois {

/// Polynomial in x_1..x_n with rational coefficients.
class MultivariatePoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultivariatePoly(std::size_t nvars = 0) : n_(nvars) {}
  static MultivariatePoly constant(std::size_t nvars, const Rational& c);
  /// x_{k+1} (0-based k).
  static MultivariatePoly variable(std::size_t nvars, std::size_t k);
  static MultivariatePoly monomial(const Rational& c, Exponents e);

  std::size_t nvars() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  MultivariatePoly& operator*=(const Rational& c);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) { return a += b; }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) { return a -= b; }
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator*(MultivariatePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultivariatePoly&, const MultivariatePoly&) = default;

  /// phi(x_{s(1)}, ..., x_{s(n)}): every x_k becomes x_{s(k)}.
  MultivariatePoly permuted(const Permutation& s) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t n_;
  std::map<Exponents, Rational> terms_;
};

/// A subgroup of S_n, verified closed and containing the identity.
class SubgroupSpec {
 public:
  /// Throws InvalidSubgroup unless `elements` is a group.
  static SubgroupSpec from_elements(std::vector<Permutation> elements);
  static SubgroupSpec generated_by(const std::vector<Permutation>& gens, std::size_t n);

  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.front().size(); }
  bool contains(const Permutation& p) const;
  std::string to_string() const;  // "{(), (1 2)}"

 private:
  std::vector<Permutation> elements_;  // sorted
};

/// Parses a comma or semicolon separated list of permutations in cycle
/// notation, optionally in braces, and returns the group they generate.
SubgroupSpec parse_subgroup(const std::string& text, std::size_t n);

/// Phi with phi(x_1..x_n) = Phi(V_1): substitute x_k := R_k modulo G.
FieldElement express_in_V(const MultivariatePoly& phi, const ResolventData& rd);

/// Phi(P_i) modulo G.
FieldElement apply_substitution(std::size_t i, const FieldElement& e, const SubstitutionGroup& g);

/// Phi(P_i) == Phi for every i.
bool is_invariant(const FieldElement& phi, const SubstitutionGroup& g);

/// (1/m) sum_i Phi(V_i) from the power sums of the roots of G.  Throws
/// NotInvariant, CertificateFailed.
Rational rational_value_via_average(const FieldElement& phi, const ResolventData& rd, const SubstitutionGroup& g);

struct SubgroupResolvent {
  FieldElement alpha;
  Integer n0;
  std::vector<Permutation> stabilizer;  // elements of S_n fixing alpha, sorted
};

/// alpha = psi(n0) with psi(t) = prod_{tau in T} (t - tau(V_1)), n0 the least
/// natural number separating psi from every psi_x, x outside T.  Throws
/// DegenerateTheta, CertificateFailed.
SubgroupResolvent subgroup_resolvent(const SubgroupSpec& T, const ResolventData& rd, const SubstitutionGroup& g,
                                     bool parallel = true);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool property_I = false;
  bool property_II = false;
  bool property_III = false;
  bool property_IV = false;
  std::optional<SubgroupResolvent> group_resolvent;
  std::size_t moved_outside = 0;  // elements of S_n outside g that move alpha
  bool all_passed() const { return property_I && property_II && property_III && property_IV; }
};

/// Random-sample checks of properties I and II, the closure table, the
/// action of the substitutions on R_k, and the stabilizer of the subgroup
/// resolvent of g.  Throws CertificateFailed with a witness on any failure.
VerificationReport verify_fundamental_theorem(const ResolventData& rd, const SubstitutionGroup& g,
                                              std::size_t samples = 32, std::uint64_t seed = 0,
                                              bool parallel = true);

/// All subgroups of g, sorted by order and then by element list.
std::vector<SubgroupSpec> enumerate_subgroups(const SubstitutionGroup& g);

}  // namespace galois

#endif  // GALOIS_FIXED_FIELD_HPP
