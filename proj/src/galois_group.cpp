#include "galois/galois_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galois {

namespace {

// Index of the unique ball in `pool` that may contain `z`; nullopt if none
// or several do.
std::optional<std::size_t> unique_overlap(const ComplexBall& z, const std::vector<ComplexBall>& pool) {
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (certainly_disjoint(z, pool[j])) continue;
    if (hit) return std::nullopt;
    hit = j;
  }
  return hit;
}

struct Attempt {
  bool ambiguous = false;
  std::vector<Permutation> rows;
};

Attempt match_rows(const ResolventData& rd, const RootSet& roots_f, const std::vector<ComplexBall>& V) {
  const std::size_t n = rd.degree();
  std::vector<RatPolynomial> R;
  for (const auto& r : rd.R) R.push_back(r.residue());
  Attempt out;
  for (auto i : rd.subset) {
    std::vector<std::uint8_t> img(n);
    std::vector<bool> taken(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      auto j = unique_overlap(evaluate(R[k], V[i]), roots_f.balls);
      if (!j || taken[*j]) {
        out.ambiguous = true;
        return out;
      }
      taken[*j] = true;
      img[k] = static_cast<std::uint8_t>(*j);
    }
    out.rows.emplace_back(std::move(img));
  }
  return out;
}

std::string join_product(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
  return s;
}

std::string transitive_name(const std::vector<Permutation>& elements, std::size_t n) {
  const std::size_t order = elements.size();
  auto has_order = [&](std::size_t k) {
    return std::any_of(elements.begin(), elements.end(), [k](const Permutation& p) { return p.order() == k; });
  };
  switch (n) {
    case 1:
      return "trivial";
    case 2:
      if (order == 2) return "C2";
      break;
    case 3:
      if (order == 3) return "C3";
      if (order == 6) return "S3";
      break;
    case 4:
      if (order == 4) return has_order(4) ? "C4" : "V4";
      if (order == 8) return "D4";
      if (order == 12) return "A4";
      if (order == 24) return "S4";
      break;
    case 5:
      if (order == 5) return "C5";
      if (order == 10) return "D5";
      if (order == 20) return "F20";
      if (order == 60) return "A5";
      if (order == 120) return "S5";
      break;
    default:
      break;
  }
  throw Error(ErrorCode::UnrecognizedOrder, "no transitive group of order " + std::to_string(order) +
                                                " on " + std::to_string(n) + " points in the table");
}

}  // namespace

std::vector<Permutation> SubstitutionGroup::permutations() const {
  std::vector<Permutation> out;
  out.reserve(elements.size());
  for (const auto& s : elements) out.push_back(s.mapping);
  return out;
}

std::size_t SubstitutionGroup::find(const Permutation& p) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].mapping == p) return i;
  return elements.size();
}

SubstitutionGroup extract_substitutions(const ResolventData& rd, const PrecisionPolicy& policy) {
  const std::size_t n = rd.degree();
  if (rd.R.size() != n || rd.subset.empty()) throw Error(ErrorCode::InvalidInput, "resolvent data incomplete");
  if (!rd.labels[rd.subset.front()].is_identity())
    throw Error(ErrorCode::CertificateFailed, "first root of G is not V_1");

  RootSet roots_f = rd.roots_f;
  std::vector<ComplexBall> V = rd.roots_V.balls;
  Attempt attempt;
  for (;;) {
    attempt = match_rows(rd, roots_f, V);
    if (!attempt.ambiguous) break;
    const mpfr_prec_t next = roots_f.precision_bits * 2;
    if (next > policy.max_bits)
      throw Error(ErrorCode::MatchAmbiguous, "R_k(V_i) does not single out a root of f within " +
                                                 std::to_string(policy.max_bits) + " bits");
    roots_f = refine(rd.roots_f, next, policy.max_bits);
    V = weighted_sum_balls(roots_f, rd.weights);
  }

  SubstitutionGroup g;
  const RatPolynomial G = to_rational(rd.G);
  std::vector<ComplexBall> g_roots;
  for (auto i : rd.subset) g_roots.push_back(V[i]);
  for (std::size_t row = 0; row < rd.subset.size(); ++row) {
    const std::size_t i = rd.subset[row];
    const Permutation& sigma = attempt.rows[row];
    if (sigma != rd.labels[i])
      throw Error(ErrorCode::CertificateFailed, "matched arrangement differs from the label of V_" + std::to_string(i + 1));
    FieldElement P = FieldElement::constant(rd.modulus, 0);
    for (std::size_t k = 0; k < n; ++k) P += rd.R[sigma(k)] * Rational(rd.weights[k]);
    if (!poly_compose_mod(G, P).is_zero())
      throw Error(ErrorCode::CertificateFailed, "G(P_" + std::to_string(row + 1) + ") != 0 mod G");
    // P_i(V_1) must be V_i and no other root of G.
    auto hit = unique_overlap(evaluate(P.residue(), g_roots[0]), g_roots);
    if (!hit || *hit != row)
      throw Error(ErrorCode::CertificateFailed, "P_" + std::to_string(row + 1) + "(V_1) is not V_" + std::to_string(i + 1));
    g.elements.push_back({sigma, i});
    g.root_embeddings.push_back(std::move(P));
  }
  if (!g.elements.front().mapping.is_identity() || g.root_embeddings.front() != FieldElement::generator(rd.modulus))
    throw Error(ErrorCode::CertificateFailed, "row of V_1 is not the identity");
  std::set<Permutation> distinct(attempt.rows.begin(), attempt.rows.end());
  if (distinct.size() != attempt.rows.size()) throw Error(ErrorCode::CertificateFailed, "two rows coincide");
  return g;
}

const std::vector<std::vector<std::size_t>>& certify_closure(SubstitutionGroup& g) {
  const std::size_t m = g.order();
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(g.elements[i].mapping, i);
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find(g.elements[a].mapping * g.elements[b].mapping);
      if (it == index.end())
        throw Error(ErrorCode::ClosureFailed, g.elements[a].mapping.cycles() + " * " + g.elements[b].mapping.cycles() +
                                                  " is not in the system");
      table[a][b] = it->second;
    }
  for (std::size_t a = 0; a < m; ++a) {
    if (table[0][a] != a || table[a][0] != a) throw Error(ErrorCode::ClosureFailed, "first row is not the identity");
    if (std::find(table[a].begin(), table[a].end(), 0) == table[a].end())
      throw Error(ErrorCode::ClosureFailed, g.elements[a].mapping.cycles() + " has no inverse");
  }
  g.cayley = std::move(table);
  return g.cayley;
}

GroupIdentity identify_permutation_group(const std::vector<Permutation>& elements, std::size_t n) {
  GroupIdentity id;
  id.order = elements.size();
  id.orbits = orbits(elements, n);
  id.transitive = id.orbits.size() == 1;
  if (id.order == 1) {
    id.name = "trivial";
    return id;
  }
  if (id.transitive) {
    id.name = transitive_name(elements, n);
    return id;
  }
  // Intransitive: name the action on each orbit.
  std::vector<std::string> parts;
  std::size_t product = 1;
  for (const auto& orbit : id.orbits) {
    if (orbit.size() == 1) continue;
    std::set<Permutation> restricted;
    for (const auto& p : elements) {
      std::vector<std::uint8_t> img(orbit.size());
      for (std::size_t k = 0; k < orbit.size(); ++k)
        img[k] = static_cast<std::uint8_t>(std::find(orbit.begin(), orbit.end(), p(orbit[k])) - orbit.begin());
      restricted.insert(Permutation(std::move(img)));
    }
    std::vector<Permutation> constituent(restricted.begin(), restricted.end());
    parts.push_back(transitive_name(constituent, orbit.size()));
    product *= constituent.size();
  }
  id.name = join_product(parts);
  if (id.order < product) id.name = "subdirect(" + id.name + ")";
  return id;
}

GroupIdentity identify_group(const SubstitutionGroup& g, bool disc_square) {
  const auto perms = g.permutations();
  const bool all_even = std::all_of(perms.begin(), perms.end(), [](const Permutation& p) { return p.is_even(); });
  if (all_even != disc_square)
    throw Error(ErrorCode::CertificateFailed, std::string("group ") + (all_even ? "is" : "is not") +
                                                  " inside A_n but the discriminant " +
                                                  (disc_square ? "is" : "is not") + " a square");
  return identify_permutation_group(perms, g.degree());
}

bool discriminant_is_square(const IntPolynomial& f) {
  const Integer d = discriminant(f);
  return d >= 0 && mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

}  // namespace galois
