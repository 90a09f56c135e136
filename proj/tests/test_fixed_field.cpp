#include <doctest.h>

#include "galois/fixed_field.hpp"
#include "galois/parser.hpp"
#include "galois/pipeline.hpp"

using namespace galois;

namespace {

struct Ctx {
  ResolventData rd;
  SubstitutionGroup g;
};

Ctx context(const std::string& text) {
  RunOptions o;
  o.verify = false;
  RunReport r = run_pipeline(parse_polynomial(text), o, text);
  return {r.data, *r.group};
}

MultivariatePoly x(std::size_t n, std::size_t k) { return MultivariatePoly::variable(n, k); }

Permutation P(std::initializer_list<int> one_based) {
  std::vector<std::uint8_t> img;
  for (int v : one_based) img.push_back(static_cast<std::uint8_t>(v - 1));
  return Permutation(img);
}

}  // namespace

TEST_CASE("multivariate polynomials") {
  MultivariatePoly p = x(3, 0) * x(3, 0) * x(3, 1) + x(3, 2) * Rational(-2);
  CHECK(p.total_degree() == 3);
  CHECK(p.to_string() == "x1^2*x2 - 2*x3");
  // x_k -> x_{s(k)} with s = (1 2 3)
  MultivariatePoly q = p.permuted(P({2, 3, 1}));
  CHECK(q == x(3, 1) * x(3, 1) * x(3, 2) + x(3, 0) * Rational(-2));
  CHECK((p - p).is_zero());
}

TEST_CASE("subgroup specifications") {
  SubgroupSpec t = parse_subgroup("(1 2)", 3);
  CHECK(t.order() == 2);
  CHECK(t.to_string() == "{(), (1 2)}");
  CHECK(parse_subgroup("{(1 2 3), (1 2)}", 3).order() == 6);
  CHECK(parse_subgroup("()", 2).order() == 1);
  CHECK(parse_subgroup("(1 2)(3 4); (1 3)(2 4)", 4).order() == 4);
  CHECK_THROWS_AS(parse_subgroup("(1 5)", 4), Error);
  try {
    SubgroupSpec::from_elements({Permutation::identity(3), P({2, 3, 1})});
    FAIL("expected InvalidSubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSubgroup);
  }
}

TEST_CASE("values of symmetric functions for x^2 - 2") {
  Ctx c = context("x^2 - 2");
  FieldElement sum = express_in_V(x(2, 0) + x(2, 1), c.rd);
  FieldElement prod = express_in_V(x(2, 0) * x(2, 1), c.rd);
  CHECK(sum.is_zero());
  CHECK(prod == FieldElement::constant(c.rd.modulus, -2));
  CHECK(express_in_V(x(2, 0), c.rd) == c.rd.R[0]);
  CHECK(rational_value_via_average(prod, c.rd, c.g) == -2);
  CHECK(rational_value_via_average(FieldElement::constant(c.rd.modulus, make_rational(3, 7)), c.rd, c.g) ==
        make_rational(3, 7));
}

TEST_CASE("substitutions act on the root expressions") {
  for (const char* text : {"x^2 - 2", "x^3 - 2", "x^4 - 2"}) {
    CAPTURE(text);
    Ctx c = context(text);
    for (std::size_t i = 0; i < c.g.order(); ++i)
      for (std::size_t k = 0; k < c.rd.degree(); ++k)
        CHECK(apply_substitution(i, c.rd.R[k], c.g) == c.rd.R[c.g.elements[i].mapping(k)]);
    CHECK(apply_substitution(0, FieldElement::generator(c.rd.modulus), c.g) ==
          FieldElement::generator(c.rd.modulus));
  }
}

TEST_CASE("invariance and rationality") {
  Ctx c = context("x^4 - 10x^2 + 1");
  const std::size_t n = 4;
  // Roots in order: -sqrt2-sqrt3, sqrt2-sqrt3, sqrt3-sqrt2, sqrt2+sqrt3.
  // x1*x2 = 1 although x1*x2 is not a symmetric expression.
  FieldElement e = express_in_V(x(n, 0) * x(n, 1), c.rd);
  CHECK(is_invariant(e, c.g));
  CHECK(rational_value_via_average(e, c.rd, c.g) == 1);
  FieldElement r1 = express_in_V(x(n, 0), c.rd);
  CHECK_FALSE(is_invariant(r1, c.g));
  try {
    rational_value_via_average(r1, c.rd, c.g);
    FAIL("expected NotInvariant");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotInvariant);
  }
  // Elementary symmetric functions give back the coefficients of f.
  MultivariatePoly e2(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) e2 += x(n, a) * x(n, b);
  FieldElement v2 = express_in_V(e2, c.rd);
  CHECK(is_invariant(v2, c.g));
  CHECK(rational_value_via_average(v2, c.rd, c.g) == -10);
}

TEST_CASE("subgroup resolvent for the trivial subgroup of x^2 - 2") {
  Ctx c = context("x^2 - 2");
  SubgroupResolvent s = subgroup_resolvent(parse_subgroup("()", 2), c.rd, c.g);
  CHECK(s.n0 == 1);
  // alpha = 1 - v
  CHECK(s.alpha == FieldElement::constant(c.rd.modulus, 1) - FieldElement::generator(c.rd.modulus));
  CHECK(s.stabilizer == std::vector<Permutation>{Permutation::identity(2)});
}

TEST_CASE("subgroup resolvent of the full symmetric group is rational") {
  Ctx c = context("x^3 - 2");
  SubgroupResolvent s = subgroup_resolvent(SubgroupSpec::from_elements(all_permutations(3)), c.rd, c.g);
  CHECK(s.alpha.is_constant());
  // psi(t) = F(t) for T = S_n.
  CHECK(s.alpha.constant_value() == c.rd.F.evaluate(Integer(s.n0)));
  CHECK(s.stabilizer == all_permutations(3));
}

TEST_CASE("every subgroup of S_n is the stabilizer of its resolvent") {
  for (const char* text : {"x^3 - 2", "x^4 - 10x^2 + 1"}) {
    CAPTURE(text);
    Ctx c = context(text);
    const std::size_t n = c.rd.degree();
    for (const auto& elems : all_subgroups(all_permutations(n))) {
      SubgroupSpec t = SubgroupSpec::from_elements(elems);
      CAPTURE(t.to_string());
      CHECK(subgroup_resolvent(t, c.rd, c.g).stabilizer == t.elements());
    }
  }
}

TEST_CASE("serial and parallel subgroup resolvents agree") {
  Ctx c = context("x^4 - 2");
  SubgroupSpec t = parse_subgroup("(1 2)", 4);
  SubgroupResolvent a = subgroup_resolvent(t, c.rd, c.g, false);
  SubgroupResolvent b = subgroup_resolvent(t, c.rd, c.g, true);
  CHECK(a.n0 == b.n0);
  CHECK(a.alpha == b.alpha);
}

TEST_CASE("subgroup lattices") {
  CHECK(enumerate_subgroups(context("x^2 - 2").g).size() == 2);
  CHECK(enumerate_subgroups(context("x^3 - 2").g).size() == 6);
  CHECK(enumerate_subgroups(context("x^4 - 10x^2 + 1").g).size() == 5);
  CHECK(enumerate_subgroups(context("x^4 - 2").g).size() == 10);
}

TEST_CASE("fundamental theorem checks") {
  SUBCASE("x^2 - 2") {
    Ctx c = context("x^2 - 2");
    VerificationReport r = verify_fundamental_theorem(c.rd, c.g);
    CHECK(r.all_passed());
    CHECK(r.moved_outside == 0);
    REQUIRE(r.group_resolvent);
    CHECK(r.group_resolvent->stabilizer == c.g.permutations());
  }
  SUBCASE("biquadratic") {
    Ctx c = context("x^4 - 10x^2 + 1");
    VerificationReport r = verify_fundamental_theorem(c.rd, c.g);
    CHECK(r.all_passed());
    CHECK(r.moved_outside == 20);
    for (const auto& check : r.checks) CHECK(check.passed);
  }
  SUBCASE("cyclic cubic: a transposition moves alpha") {
    Ctx c = context("x^3 + x^2 - 2x - 1");
    VerificationReport r = verify_fundamental_theorem(c.rd, c.g);
    CHECK(r.all_passed());
    CHECK(r.moved_outside == 3);
    REQUIRE(r.group_resolvent);
    CHECK(r.group_resolvent->stabilizer.size() == 3);
  }
  SUBCASE("same seed, same report") {
    Ctx c = context("x^3 - 2");
    VerificationReport a = verify_fundamental_theorem(c.rd, c.g, 8, 42);
    VerificationReport b = verify_fundamental_theorem(c.rd, c.g, 8, 42);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("a tampered group is rejected") {
  Ctx c = context("x^3 - 2");
  SubstitutionGroup g = c.g;
  // Swap the mappings of two rows; the action on R_k no longer matches.
  std::swap(g.elements[1].mapping, g.elements[2].mapping);
  CHECK_THROWS_AS(verify_fundamental_theorem(c.rd, g), Error);
}
