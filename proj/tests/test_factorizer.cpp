#include <doctest.h>

#include "galois/factorizer.hpp"
#include "galois/resolvent.hpp"

using namespace galois;

namespace {

IntPolynomial ip(std::initializer_list<long> descending) {
  std::vector<Integer> c;
  for (long x : descending) c.emplace_back(x);
  return IntPolynomial::from_descending(c);
}

struct Setup {
  ResolventExpansion ex;
  std::vector<Permutation> labels;
};

Setup setup(const IntPolynomial& f) {
  RootSet rs = isolate_roots(f, 128);
  WeightTuple w = choose_weights(rs);
  Setup s{expand_resolvent(rs, w), all_permutations(static_cast<std::size_t>(f.degree()))};
  return s;
}

FactorResult factor_with_labels(const Setup& s, bool irreducible) {
  FactorOptions o;
  o.labels = s.labels;
  o.f_irreducible = irreducible;
  return irreducible_factor_containing(s.ex.F, s.ex.roots_V, 0, o);
}

}  // namespace

TEST_CASE("pruning bounds") {
  CHECK(subset_pruning_bounds(4, true) == std::vector<std::size_t>{4, 8, 12, 24});
  CHECK(subset_pruning_bounds(2, true) == std::vector<std::size_t>{2});
  CHECK(subset_pruning_bounds(3, false) == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(subset_pruning_bounds(3, true) == std::vector<std::size_t>{3, 6});
}

TEST_CASE("irreducible resolvent is its own factor") {
  IntPolynomial F = ip({1, 0, -2});
  RootSet rs = isolate_roots(F, 128);
  FactorResult r = irreducible_factor_containing(F, rs, 0);
  CHECK(r.G == F);
  CHECK(r.subset == std::vector<std::size_t>{0, 1});
}

TEST_CASE("linear factor for a split resolvent") {
  // x^2 - 1 with weights (1,2): F = v^2 - 1, V_1 = 1*(-1) + 2*1 = 1.
  IntPolynomial F = ip({1, 0, -1});
  RootSet rs = isolate_roots(F, 128);  // [-1, 1]
  FactorResult a = irreducible_factor_containing(F, rs, 1);
  CHECK(a.G == ip({1, -1}));
  CHECK(a.subset == std::vector<std::size_t>{1});
  FactorResult b = irreducible_factor_containing(F, rs, 0);
  CHECK(b.G == ip({1, 1}));
}

TEST_CASE("group orders of the quartic corpus") {
  struct Case {
    IntPolynomial f;
    int order;
  };
  const std::vector<Case> cases{{ip({1, 0, -10, 0, 1}), 4},
                                {ip({1, 1, 1, 1, 1}), 4},
                                {ip({1, 0, 0, 0, -2}), 8},
                                {ip({1, 0, 0, 8, 12}), 12},
                                {ip({1, 0, 0, 1, 1}), 24},
                                {ip({1, 0, 0, 0, 1}), 4}};
  for (const auto& c : cases) {
    CAPTURE(to_string(c.f));
    Setup s = setup(c.f);
    FactorResult r = factor_with_labels(s, true);
    CHECK(r.G.degree() == c.order);
    CHECK(divides_exactly(r.G, s.ex.F));
    CHECK_FALSE(r.used_fallback);
    CHECK(r.subset.front() == 0);
    // The cofactor F / G is exact and shares no root with G.
    DivMod<IntPolynomial> q = divmod_monic(s.ex.F, r.G);
    CHECK(q.remainder.is_zero());
    if (q.quotient.degree() > 0) CHECK(poly_gcd(to_rational(q.quotient), to_rational(r.G)).degree() == 0);
  }
}

TEST_CASE("coset search and plain subset enumeration agree") {
  Setup s = setup(ip({1, 1, -2, -1}));
  FactorResult with = factor_with_labels(s, true);
  FactorResult without = irreducible_factor_containing(s.ex.F, s.ex.roots_V, 0);
  CHECK(with.G == without.G);
  CHECK(with.subset == without.subset);
  CHECK(with.G.degree() == 3);
}

TEST_CASE("reducible input") {
  // (x^2 - 2)(x^2 - 3): group C2 x C2 of order 4.
  IntPolynomial f = ip({1, 0, -5, 0, 6});
  Setup s = setup(f);
  FactorResult r = factor_with_labels(s, false);
  CHECK(r.G.degree() == 4);
  CHECK(divides_exactly(r.G, s.ex.F));
}

TEST_CASE("serial and parallel searches agree") {
  Setup s = setup(ip({1, 0, 0, 0, -2}));
  FactorOptions a, b;
  a.labels = b.labels = s.labels;
  a.parallel = false;
  FactorResult ra = irreducible_factor_containing(s.ex.F, s.ex.roots_V, 0, a);
  FactorResult rb = irreducible_factor_containing(s.ex.F, s.ex.roots_V, 0, b);
  CHECK(ra.G == rb.G);
  CHECK(ra.subset == rb.subset);
}

TEST_CASE("irreducibility certificates") {
  CHECK(certify_irreducible(ip({1, 0, 0, 0, 1})));
  CHECK(certify_irreducible(ip({1, 0, -10, 0, 1})));
  CHECK(certify_irreducible(ip({1, 0, 0, -2})));
  CHECK_FALSE(certify_irreducible(ip({1, 0, -5, 0, 6})));
  CHECK_FALSE(certify_irreducible(ip({1, 0, -1})));
  CHECK(certify_irreducible(ip({1, 5})));
}

TEST_CASE("factor by roots partitions the roots") {
  // (x - 1)(x^2 + 1)(x^2 - 2)
  IntPolynomial f = ip({1, -1}) * ip({1, 0, 1}) * ip({1, 0, -2});
  auto fs = factor_by_roots(f);
  REQUIRE(fs.size() == 3);
  IntPolynomial prod = IntPolynomial::constant(1);
  std::size_t count = 0;
  for (const auto& rf : fs) {
    prod = prod * rf.factor;
    count += rf.roots.size();
    CHECK(rf.roots.size() == static_cast<std::size_t>(rf.factor.degree()));
  }
  CHECK(prod == f);
  CHECK(count == 5);
}
