#include "galois/fixed_field.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "galois/kernels.hpp"

namespace galois {

// ---------------------------------------------------------------------------
// MultivariatePoly

MultivariatePoly MultivariatePoly::constant(std::size_t nvars, const Rational& c) {
  MultivariatePoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultivariatePoly MultivariatePoly::variable(std::size_t nvars, std::size_t k) {
  Exponents e(nvars, 0);
  e.at(k) = 1;
  MultivariatePoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultivariatePoly MultivariatePoly::monomial(const Rational& c, Exponents e) {
  MultivariatePoly p(e.size());
  p.add_term(e, c);
  return p;
}

void MultivariatePoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

unsigned MultivariatePoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  if (n_ != o.n_) throw Error(ErrorCode::InvalidInput, "variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) {
  if (n_ != o.n_) throw Error(ErrorCode::InvalidInput, "variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidInput, "variable counts differ");
  MultivariatePoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultivariatePoly::Exponents e(a.n_);
      for (std::size_t k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultivariatePoly MultivariatePoly::permuted(const Permutation& s) const {
  if (s.size() != n_) throw Error(ErrorCode::InvalidInput, "permutation degree differs from variable count");
  MultivariatePoly r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) f[s(k)] = e[k];
    r.add_term(f, c);
  }
  return r;
}

std::string MultivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    if (a != 1 || constant) os << a.get_str() << (constant ? "" : "*");
    bool need_star = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      os << (need_star ? "*" : "") << "x" << k + 1;
      if (e[k] > 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SubgroupSpec

SubgroupSpec SubgroupSpec::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw Error(ErrorCode::InvalidSubgroup, "empty element list");
  const std::size_t n = elements.front().size();
  for (const auto& p : elements)
    if (p.size() != n) throw Error(ErrorCode::InvalidSubgroup, "elements of different degree");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_closed_group(elements)) throw Error(ErrorCode::InvalidSubgroup, "elements do not form a group");
  SubgroupSpec s;
  s.elements_ = std::move(elements);
  return s;
}

SubgroupSpec SubgroupSpec::generated_by(const std::vector<Permutation>& gens, std::size_t n) {
  return from_elements(generated_group(gens, n));
}

bool SubgroupSpec::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::string SubgroupSpec::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) s += (i ? ", " : "") + elements_[i].cycles();
  return s + "}";
}

SubgroupSpec parse_subgroup(const std::string& text, std::size_t n) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error(ErrorCode::InvalidSubgroup, "empty subgroup description");
  body = body.substr(first, last - first + 1);
  if (body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorCode::InvalidSubgroup, "unbalanced braces in \"" + text + "\"");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Permutation> gens;
  std::string item;
  int depth = 0;
  auto flush = [&] {
    if (item.find_first_not_of(" \t") == std::string::npos) {
      if (!item.empty() || depth != 0) throw Error(ErrorCode::InvalidSubgroup, "empty element in \"" + text + "\"");
      return;
    }
    try {
      gens.push_back(Permutation::parse_cycles(item, n));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidSubgroup, e.what());
    }
    item.clear();
  };
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw Error(ErrorCode::InvalidSubgroup, "unbalanced parentheses in \"" + text + "\"");
    if (depth == 0 && (ch == ',' || ch == ';')) {
      flush();
      continue;
    }
    item += ch;
  }
  if (depth != 0) throw Error(ErrorCode::InvalidSubgroup, "unbalanced parentheses in \"" + text + "\"");
  flush();
  if (gens.empty()) throw Error(ErrorCode::InvalidSubgroup, "empty subgroup description");
  return SubgroupSpec::generated_by(gens, n);
}

// ---------------------------------------------------------------------------
// Field-side operations

namespace {

// Residues of monomials in R_1..R_n, memoized.
class MonomialTable {
 public:
  explicit MonomialTable(const ResolventData& rd) : rd_(rd) {}

  const FieldElement& get(const MultivariatePoly::Exponents& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    // Peel one factor off the last nonzero exponent.
    std::size_t k = e.size();
    while (k > 0 && e[k - 1] == 0) --k;
    FieldElement value = FieldElement::constant(rd_.modulus, 1);
    if (k > 0) {
      MultivariatePoly::Exponents smaller = e;
      --smaller[k - 1];
      value = get(smaller) * rd_.R[k - 1];
    }
    return cache_.emplace(e, std::move(value)).first->second;
  }

  FieldElement express(const MultivariatePoly& phi) {
    if (phi.nvars() != rd_.degree()) throw Error(ErrorCode::InvalidInput, "variable count differs from deg f");
    FieldElement sum = FieldElement::constant(rd_.modulus, 0);
    for (const auto& [e, c] : phi.terms()) sum += get(e) * c;
    return sum;
  }

 private:
  const ResolventData& rd_;
  std::map<MultivariatePoly::Exponents, FieldElement> cache_;
};

// Powers P_i^j of every root embedding, so that Phi -> Phi(P_i) is a
// matrix-vector product.
class EmbeddingPowers {
 public:
  explicit EmbeddingPowers(const SubstitutionGroup& g) : g_(g) {
    if (g.root_embeddings.empty()) return;
    const std::size_t m = static_cast<std::size_t>(g.root_embeddings.front().modulus()->degree());
    powers_.resize(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
      const FieldElement& P = g.root_embeddings[i];
      powers_[i].push_back(FieldElement::constant(P.modulus(), 1));
      for (std::size_t j = 1; j < m; ++j) powers_[i].push_back(powers_[i].back() * P);
    }
  }

  FieldElement apply(std::size_t i, const FieldElement& e) const {
    const RatPolynomial r = e.residue();
    FieldElement sum = FieldElement::constant(e.modulus(), 0);
    for (int j = 0; j <= r.degree(); ++j)
      if (r.coeff(j) != 0) sum += powers_[i][j] * r.coeff(j);
    return sum;
  }

  bool invariant(const FieldElement& e) const {
    if (e.is_constant()) return true;
    for (std::size_t i = 1; i < g_.order(); ++i)
      if (apply(i, e) != e) return false;
    return true;
  }

 private:
  const SubstitutionGroup& g_;
  std::vector<std::vector<FieldElement>> powers_;
};

Rational average_over_roots(const FieldElement& phi, const ResolventData& rd) {
  const std::size_t m = rd.m();
  const std::vector<Rational> p = power_sums(rd.G, m);
  const RatPolynomial r = phi.residue();
  Rational total = 0;
  for (int j = 0; j <= r.degree(); ++j) total += r.coeff(j) * p[j];
  Rational value = total / Rational(static_cast<unsigned long>(m));
  if (!phi.is_constant() || phi.constant_value() != value)
    throw Error(ErrorCode::CertificateFailed, "invariant residue " + phi.to_string() +
                                                  " is not the constant " + value.get_str());
  return value;
}

MultivariatePoly random_phi(std::mt19937_64& rng, std::size_t n) {
  auto draw = [&rng](unsigned long bound) { return static_cast<unsigned long>(rng() % bound); };
  MultivariatePoly phi(n);
  const unsigned long terms = 1 + draw(4);
  for (unsigned long t = 0; t < terms; ++t) {
    long c = static_cast<long>(draw(18)) - 9;
    if (c >= 0) ++c;  // skip zero: values in -9..-1, 1..9
    MultivariatePoly::Exponents e(n, 0);
    const unsigned long degree = draw(4);
    for (unsigned long d = 0; d < degree; ++d) ++e[draw(n)];
    phi += MultivariatePoly::monomial(Rational(c), e);
  }
  return phi;
}

MultivariatePoly orbit_sum(const MultivariatePoly& phi, const std::vector<Permutation>& group) {
  MultivariatePoly sum(phi.nvars());
  for (const auto& s : group) sum += phi.permuted(s);
  return sum;
}

// Numerical value of phi at the root balls of f.
ComplexBall evaluate_at_roots(const MultivariatePoly& phi, const RootSet& roots) {
  const mpfr_prec_t prec = roots.precision_bits;
  ComplexBall sum(prec);
  for (const auto& [e, c] : phi.terms()) {
    ComplexBall term = ComplexBall::exact(c, prec);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned j = 0; j < e[k]; ++j) term *= roots[k];
    sum += term;
  }
  return sum;
}

}  // namespace

FieldElement express_in_V(const MultivariatePoly& phi, const ResolventData& rd) {
  MonomialTable table(rd);
  return table.express(phi);
}

FieldElement apply_substitution(std::size_t i, const FieldElement& e, const SubstitutionGroup& g) {
  if (i >= g.order()) throw Error(ErrorCode::InvalidInput, "substitution index out of range");
  return poly_compose_mod(e.residue(), g.root_embeddings[i]);
}

bool is_invariant(const FieldElement& phi, const SubstitutionGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (apply_substitution(i, phi, g) != phi) return false;
  return true;
}

Rational rational_value_via_average(const FieldElement& phi, const ResolventData& rd, const SubstitutionGroup& g) {
  if (!is_invariant(phi, g)) throw Error(ErrorCode::NotInvariant, phi.to_string() + " is moved by the group");
  return average_over_roots(phi, rd);
}

SubgroupResolvent subgroup_resolvent(const SubgroupSpec& T, const ResolventData& rd, const SubstitutionGroup& g,
                                     bool parallel) {
  const std::size_t n = rd.degree();
  if (T.degree() != n || (g.order() && g.degree() != n))
    throw Error(ErrorCode::InvalidSubgroup, "subgroup degree differs from deg f");
  const auto sn = all_permutations(n);

  // tau(V_1) = sum_k n_k R_{tau(k)}, realized for every arrangement.
  std::map<Permutation, FieldElement> conj;
  for (const auto& s : sn) {
    FieldElement v = FieldElement::constant(rd.modulus, 0);
    for (std::size_t k = 0; k < n; ++k) v += rd.R[s(k)] * Rational(rd.weights[k]);
    conj.emplace(s, std::move(v));
  }

  // psi_x only depends on the coset xT.
  std::map<std::vector<Permutation>, std::size_t> coset_index;
  std::vector<std::vector<Permutation>> cosets;
  std::vector<std::size_t> coset_of(sn.size());
  for (std::size_t i = 0; i < sn.size(); ++i) {
    std::vector<Permutation> c;
    for (const auto& t : T.elements()) c.push_back(sn[i] * t);
    std::sort(c.begin(), c.end());
    auto [it, inserted] = coset_index.emplace(c, cosets.size());
    if (inserted) cosets.push_back(std::move(c));
    coset_of[i] = it->second;
  }
  const std::size_t home = coset_of[0];  // sn[0] is the identity

  const std::size_t cap = 10 * sn.size() * T.order();
  std::vector<std::size_t> zeros(cosets.size(), 0);
  for (std::size_t t = 1; t <= cap; ++t) {
    const Rational n0(static_cast<unsigned long>(t));
    std::vector<std::vector<FieldElement>> factors(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c)
      for (const auto& p : cosets[c]) factors[c].push_back(FieldElement::constant(rd.modulus, n0) - conj.at(p));
    const std::vector<FieldElement> values = kernels::batched_products(factors, parallel);

    bool separated = true;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      if (c == home || values[c] != values[home]) continue;
      separated = false;
      // theta_x has degree < |T|; |T| zeros force theta_x = 0.
      if (++zeros[c] >= T.order())
        throw Error(ErrorCode::DegenerateTheta,
                    "psi_x = psi for x = " + cosets[c].front().cycles() + "; the weighted sums are not distinct");
    }
    if (!separated) continue;

    SubgroupResolvent out{values[home], Integer(static_cast<unsigned long>(t)), {}};
    for (std::size_t i = 0; i < sn.size(); ++i)
      if (values[coset_of[i]] == out.alpha) out.stabilizer.push_back(sn[i]);
    if (out.stabilizer != T.elements())
      throw Error(ErrorCode::CertificateFailed, "stabilizer of alpha differs from T");
    return out;
  }
  throw Error(ErrorCode::DegenerateTheta, "no separating n0 up to " + std::to_string(cap));
}

VerificationReport verify_fundamental_theorem(const ResolventData& rd, const SubstitutionGroup& g,
                                              std::size_t samples, std::uint64_t seed, bool parallel) {
  const std::size_t n = rd.degree();
  const auto group = g.permutations();
  const auto sn = all_permutations(n);
  VerificationReport report;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::CertificateFailed, what); };

  MonomialTable table(rd);
  EmbeddingPowers action(g);
  std::mt19937_64 rng(seed);

  // Property III: closure, identity, inverses.
  {
    SubstitutionGroup copy = g;
    const auto& cayley = certify_closure(copy);
    if (!g.cayley.empty() && g.cayley != cayley) fail("stored Cayley table differs from recomputed one");
    report.checks.push_back({"closure", true, g.order() * g.order(), "Cayley table total; identity and inverses present"});
    report.property_III = true;
  }

  // The substitutions act on the R_k as their permutations say.
  {
    std::size_t cases = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t k = 0; k < n; ++k, ++cases)
        if (action.apply(i, rd.R[k]) != rd.R[g.elements[i].mapping(k)])
          fail("S_" + std::to_string(i + 1) + "(R_" + std::to_string(k + 1) + ") != R_" +
               std::to_string(g.elements[i].mapping(k) + 1));
    report.checks.push_back({"galois_action", true, cases, "S_i(R_k) = R_{sigma_i(k)} mod G"});
  }

  // Property I: group averages are invariant and have rational values that
  // agree with the numerical value at the roots.
  {
    for (std::size_t s = 0; s < samples; ++s) {
      const MultivariatePoly phi = orbit_sum(random_phi(rng, n), group);
      const FieldElement Phi = table.express(phi);
      if (!action.invariant(Phi)) fail("group average " + phi.to_string() + " is not invariant");
      const Rational value = average_over_roots(Phi, rd);
      const ComplexBall numeric = evaluate_at_roots(phi, rd.roots_f);
      if (certainly_disjoint(numeric, ComplexBall::exact(value, rd.roots_f.precision_bits)))
        fail("value " + value.get_str() + " of " + phi.to_string() + " disagrees with the roots");
    }
    report.checks.push_back({"property_I", true, samples, "invariant functions have rational values"});
    report.property_I = true;
  }

  // Property II: functions with rational values are invariant; a raw random
  // function is invariant exactly when its residue is constant.
  {
    for (std::size_t s = 0; s < samples; ++s) {
      const MultivariatePoly phi =
          orbit_sum(random_phi(rng, n), sn) + orbit_sum(random_phi(rng, n), group);
      const FieldElement Phi = table.express(phi);
      if (!Phi.is_constant()) fail(phi.to_string() + " should have a rational value");
      if (!action.invariant(Phi)) fail(phi.to_string() + " has a rational value but is moved");
      const MultivariatePoly raw = random_phi(rng, n);
      const FieldElement Raw = table.express(raw);
      if (Raw.is_constant() != action.invariant(Raw))
        fail(raw.to_string() + ": rational value and invariance disagree");
    }
    report.checks.push_back({"property_II", true, samples, "rational-valued functions are invariant"});
    report.property_II = true;
  }

  // Auxiliary lemma: permuting the variables by S_i matches Phi -> Phi(P_i).
  {
    std::size_t cases = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const MultivariatePoly phi = random_phi(rng, n);
      const std::size_t i = static_cast<std::size_t>(rng() % g.order());
      const FieldElement lhs = table.express(phi.permuted(g.elements[i].mapping));
      if (lhs != action.apply(i, table.express(phi)))
        fail("permuted " + phi.to_string() + " differs from its image under S_" + std::to_string(i + 1));
      ++cases;
    }
    report.checks.push_back({"substitution_lemma", true, cases, "phi(sigma_i x) = Phi(V_i)"});
  }

  // Property IV: the subgroup resolvent of g is fixed by exactly g.
  {
    report.group_resolvent =
        subgroup_resolvent(SubgroupSpec::from_elements(group), rd, g, parallel);
    if (report.group_resolvent->stabilizer != SubgroupSpec::from_elements(group).elements())
      fail("stabilizer of alpha differs from the group");
    report.moved_outside = sn.size() - group.size();
    report.checks.push_back({"property_IV", true, sn.size(),
                             std::to_string(report.moved_outside) + " elements outside the group move alpha"});
    report.property_IV = true;
  }
  return report;
}

std::vector<SubgroupSpec> enumerate_subgroups(const SubstitutionGroup& g) {
  std::vector<SubgroupSpec> out;
  for (auto& h : all_subgroups(g.permutations())) out.push_back(SubgroupSpec::from_elements(std::move(h)));
  return out;
}

}  // namespace galois
