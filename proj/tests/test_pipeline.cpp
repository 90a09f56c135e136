#include <doctest.h>

#include "galois/parser.hpp"
#include "galois/pipeline.hpp"
#include "galois/report.hpp"

using namespace galois;

namespace {

RunReport run(const std::string& text, RunOptions o = {}) { return run_pipeline(parse_polynomial(text), o, text); }

ErrorCode code_of(const std::string& text, RunOptions o = {}) {
  try {
    run(text, o);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << text);
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("group names of the corpus") {
  const std::vector<std::pair<std::string, std::string>> corpus{
      {"x^2 - 2", "C2"},         {"x^3 - 2", "S3"},          {"x^3 + x^2 - 2x - 1", "C3"},
      {"x^4 - 10x^2 + 1", "V4"}, {"x^4 + x^3 + x^2 + x + 1", "C4"}, {"x^4 - 2", "D4"},
      {"x^4 + 8x + 12", "A4"},   {"x^4 + x + 1", "S4"}};
  for (const auto& [text, name] : corpus) {
    CAPTURE(text);
    RunReport r = run(text);
    CHECK(r.identity.name == name);
    REQUIRE(r.verification);
    CHECK(r.verification->all_passed());
    CHECK(r.group->order() == static_cast<std::size_t>(r.data.G.degree()));
  }
}

TEST_CASE("inputs needing normalization or reduction") {
  RunReport a = run("x^2 + x/2 + 1/4");
  CHECK(a.data.scale == 2);
  CHECK(a.data.f == IntPolynomial::from_descending({1, 1, 1}));
  CHECK(a.identity.name == "C2");
  CHECK(a.data.G == IntPolynomial::from_descending({1, 3, 3}));

  RunReport b = run("3x^2 - 1");
  CHECK(b.data.f == IntPolynomial::from_descending({1, 0, -3}));
  CHECK(b.identity.name == "C2");

  RunReport c = run("(x - 1)^2");
  CHECK(c.squarefree_reduced);
  CHECK(c.identity.name == "trivial");

  RunReport d = run("(x^2 - 2)(x^2 - 3)");
  CHECK_FALSE(d.data.f_irreducible);
  CHECK(d.identity.name == "C2 x C2");
  CHECK_FALSE(d.identity.transitive);

  RunReport e = run("x^4 + 1");
  CHECK(e.identity.name == "V4");
}

TEST_CASE("input errors") {
  CHECK(code_of("x + 1") == ErrorCode::InvalidInput);
  CHECK(code_of("5") == ErrorCode::InvalidInput);
  CHECK(code_of("x^5 - x - 1") == ErrorCode::InvalidInput);
  RunOptions bad;
  bad.degree_limit = 7;
  CHECK(code_of("x^2 - 2", bad) == ErrorCode::InvalidInput);
  RunOptions sub;
  sub.subgroup = "(1 2 3)";
  CHECK(code_of("x^2 - 2", sub) == ErrorCode::InvalidSubgroup);
}

TEST_CASE("errors name the stage") {
  RunOptions o;
  o.max_weight = 4;
  try {
    run("x^4 + 1", o);
    FAIL("expected SearchExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchExhausted);
    CHECK(e.detail().rfind("weights: ", 0) == 0);
  }
}

TEST_CASE("fixed field stage") {
  RunOptions o;
  o.subgroup = "()";
  RunReport r = run("x^2 - 2", o);
  REQUIRE(r.subgroup_resolvent);
  CHECK(r.subgroup_resolvent->n0 == 1);
  CHECK(r.subgroup_resolvent->alpha.to_string() == "-v + 1");
  CHECK(r.subgroup_resolvent->stabilizer.size() == 1);
}

TEST_CASE("reports are deterministic") {
  for (const char* text : {"x^3 - 2", "x^4 - 2"}) {
    RunOptions serial;
    serial.parallel = false;
    const std::string a = report_json(run(text), false).dump();
    const std::string b = report_json(run(text), false).dump();
    const std::string c = report_json(run(text, serial), false).dump();
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("report contents") {
  RunReport r = run("x^2 - 2");
  auto j = report_json(r, false);
  CHECK(j["group"]["name"] == "C2");
  CHECK(j["group"]["order"] == 2);
  CHECK(j["resolvent"]["coefficients"] == nlohmann::ordered_json::array({"1", "0", "-2"}));
  CHECK(j["factor"]["subset"] == nlohmann::ordered_json::array({1, 2}));
  CHECK(j["verification"]["properties"]["I"] == "pass");
  CHECK(j["timings"].empty());
  CHECK_FALSE(report_json(r, true)["timings"].empty());

  const std::string text = render_text(r, Command::Group, false);
  CHECK(text.find("C2 (order 2)") != std::string::npos);
}
