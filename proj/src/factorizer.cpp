#include "galois/factorizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "galois/kernels.hpp"

namespace galois {

namespace {

constexpr std::size_t kBatch = 4096;

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

std::size_t degree_from_factorial(std::size_t r) {
  std::size_t n = 1;
  while (factorial(n) < r) ++n;
  return factorial(n) == r ? n : 0;
}

// Roots of the polynomial under test at the current precision, escalated on
// demand.
class Escalator {
 public:
  Escalator(RootSet start, std::function<RootSet(mpfr_prec_t)> refresh, mpfr_prec_t max_bits)
      : roots_(std::move(start)), refresh_(std::move(refresh)), max_bits_(max_bits) {}

  const RootSet& roots() const { return roots_; }

  void escalate() {
    const mpfr_prec_t next = roots_.precision_bits * 2;
    if (next > max_bits_)
      throw Error(ErrorCode::PrecisionExhausted,
                  "factor candidates not decided within " + std::to_string(max_bits_) + " bits");
    roots_ = refresh_(next);
  }

 private:
  RootSet roots_;
  std::function<RootSet(mpfr_prec_t)> refresh_;
  mpfr_prec_t max_bits_;
};

struct Found {
  IntPolynomial divisor;
  std::vector<std::size_t> subset;
};

// Scan one cardinality class, escalating while some candidate stays
// undecided and none divides.
std::optional<Found> scan_with_escalation(const IntPolynomial& F, Escalator& esc,
                                          const std::vector<std::vector<std::size_t>>& candidates,
                                          bool parallel) {
  for (;;) {
    kernels::ScanResult r = kernels::scan_candidates(F, esc.roots().balls, candidates, parallel);
    if (r.first) return Found{std::move(r.divisor), candidates[*r.first]};
    if (!r.inconclusive) return std::nullopt;
    esc.escalate();
  }
}

// Every subset of `pool` of the given size that contains `anchor`, streamed
// in lexicographic order in batches.
std::optional<Found> scan_subsets_of_size(const IntPolynomial& F, Escalator& esc,
                                          const std::vector<std::size_t>& pool, std::size_t anchor,
                                          std::size_t size, bool parallel) {
  std::vector<std::size_t> others;
  for (auto i : pool)
    if (i != anchor) others.push_back(i);
  if (size == 0 || size - 1 > others.size()) return std::nullopt;
  const std::size_t k = size - 1;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::vector<std::size_t>> batch;
  bool more = true;
  while (more) {
    std::vector<std::size_t> subset{anchor};
    for (auto p : pick) subset.push_back(others[p]);
    std::sort(subset.begin(), subset.end());
    batch.push_back(std::move(subset));

    // next k-combination of others
    more = false;
    for (std::size_t i = k; i-- > 0;) {
      if (pick[i] < others.size() - k + i) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        more = true;
        break;
      }
    }
    if (batch.size() == kBatch || !more) {
      if (auto found = scan_with_escalation(F, esc, batch, parallel)) return found;
      batch.clear();
    }
  }
  return std::nullopt;
}

std::optional<Found> full_enumeration(const IntPolynomial& F, Escalator& esc, const std::vector<std::size_t>& pool,
                                      std::size_t anchor, const std::vector<std::size_t>& sizes, bool parallel) {
  for (auto s : sizes)
    if (auto found = scan_subsets_of_size(F, esc, pool, anchor, s, parallel)) return found;
  return std::nullopt;
}

// Root index sets {V_{h sigma} : h in H} for the subgroups H of S_n, grouped
// by size and sorted lexicographically within a size.
std::map<std::size_t, std::vector<std::vector<std::size_t>>> coset_candidates(
    const std::vector<Permutation>& labels, std::size_t v1_index, std::size_t n, bool transitive_only) {
  std::map<Permutation, std::size_t> where;
  for (std::size_t i = 0; i < labels.size(); ++i) where.emplace(labels[i], i);
  const Permutation& sigma = labels[v1_index];
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> out;
  for (const auto& H : all_subgroups(all_permutations(n))) {
    if (transitive_only && orbits(H, n).size() != 1) continue;
    std::vector<std::size_t> subset;
    for (const auto& h : H) subset.push_back(where.at(h * sigma));
    std::sort(subset.begin(), subset.end());
    out[subset.size()].push_back(std::move(subset));
  }
  for (auto& [size, list] : out) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace

std::vector<std::size_t> subset_pruning_bounds(std::size_t n, bool irreducible) {
  const std::size_t total = factorial(n);
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= total; ++d)
    if (total % d == 0 && (!irreducible || d % n == 0)) out.push_back(d);
  return out;
}

FactorResult irreducible_factor_containing(const IntPolynomial& F, const RootSet& roots_V, std::size_t v1_index,
                                           const FactorOptions& options) {
  const std::size_t r = roots_V.size();
  if (F.degree() != static_cast<int>(r) || v1_index >= r)
    throw Error(ErrorCode::InvalidInput, "root set does not match F");
  std::function<RootSet(mpfr_prec_t)> refresh = options.refine_roots;
  if (!refresh)
    refresh = [&roots_V, &options](mpfr_prec_t bits) { return refine(roots_V, bits, options.policy.max_bits); };
  Escalator esc(roots_V, refresh, options.policy.max_bits);
  auto finish = [&](Found found, bool fallback) {
    return FactorResult{std::move(found.divisor), std::move(found.subset), esc.roots(), fallback};
  };

  // A rational V_1 gives a linear factor directly.
  IntegerCheck c = certify_integer(esc.roots()[v1_index]);
  if (c.status == IntegerCertificate::Integer && F.evaluate(c.value) == 0)
    return finish(Found{IntPolynomial::linear(c.value), {v1_index}}, false);

  const std::size_t n = options.n ? options.n : degree_from_factorial(r);
  std::vector<std::size_t> pool(r);
  std::iota(pool.begin(), pool.end(), 0);

  if (options.labels && options.labels->size() == r && n > 0) {
    // The roots of G are the images of V_1 under the Galois group, which is a
    // subgroup of S_n, so one of these cosets is exactly the root set of G.
    auto by_size = coset_candidates(*options.labels, v1_index, n, options.f_irreducible);
    for (const auto& [size, list] : by_size)
      if (auto found = scan_with_escalation(F, esc, list, options.parallel)) return finish(std::move(*found), false);
  }

  std::vector<std::size_t> sizes;
  if (n > 0) sizes = subset_pruning_bounds(n, options.f_irreducible);
  if (auto found = full_enumeration(F, esc, pool, v1_index, sizes, options.parallel))
    return finish(std::move(*found), true);
  // Pruning is only advisory.
  std::vector<std::size_t> rest;
  for (std::size_t s = 1; s <= r; ++s)
    if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) rest.push_back(s);
  if (auto found = full_enumeration(F, esc, pool, v1_index, rest, options.parallel))
    return finish(std::move(*found), true);
  throw Error(ErrorCode::InternalError, "no exact divisor of F vanishes at V_1");
}

std::vector<RootFactor> factor_by_roots(const IntPolynomial& f, const PrecisionPolicy& policy) {
  if (f.degree() < 1) return {};
  if (f.leading() != 1) throw Error(ErrorCode::NonMonicInput, "factor_by_roots needs a monic polynomial");
  RootSet rs = isolate_roots(f, policy.initial_bits, policy.max_bits);
  Escalator esc(rs, [&rs, &policy](mpfr_prec_t bits) { return refine(rs, bits, policy.max_bits); },
                policy.max_bits);
  std::vector<RootFactor> out;
  std::vector<std::size_t> pool(rs.size());
  std::iota(pool.begin(), pool.end(), 0);
  while (!pool.empty()) {
    const std::size_t anchor = pool.front();
    std::vector<std::size_t> sizes(pool.size());
    std::iota(sizes.begin(), sizes.end(), 1);
    auto found = full_enumeration(f, esc, pool, anchor, sizes, false);
    if (!found) throw Error(ErrorCode::InternalError, "no factor of f vanishes at a root");
    std::vector<std::size_t> remaining;
    std::set_difference(pool.begin(), pool.end(), found->subset.begin(), found->subset.end(),
                        std::back_inserter(remaining));
    out.push_back({std::move(found->divisor), std::move(found->subset)});
    pool = std::move(remaining);
  }
  return out;
}

bool certify_irreducible(const IntPolynomial& f, const PrecisionPolicy& policy) {
  if (f.degree() <= 1) return true;
  return factor_by_roots(f, policy).size() == 1;
}

}  // namespace galois
