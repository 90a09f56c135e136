// Acceptance run: one PASS/FAIL line per criterion.  Exit status is the
// number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "galois/parser.hpp"
#include "galois/pipeline.hpp"
#include "galois/report.hpp"

using namespace galois;

namespace {

struct CorpusItem {
  std::string text;
  std::string group;
  std::size_t order;
};

const std::vector<CorpusItem> kCorpus{
    {"x^2 - 2", "C2", 2},
    {"x^3 - 2", "S3", 6},
    {"x^3 + x^2 - 2x - 1", "C3", 3},
    {"x^4 - 10x^2 + 1", "V4", 4},
    {"x^4 + x^3 + x^2 + x + 1", "C4", 4},
    {"x^4 - 2", "D4", 8},
    {"x^4 + 8x + 12", "A4", 12},
    {"x^4 + x + 1", "S4", 24},
};

struct Timed {
  RunReport report;
  double seconds = 0;
};

Timed run(const std::string& text) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport r = run_pipeline(parse_polynomial(text), RunOptions{}, text);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(r), s};
}

class Criterion {
 public:
  explicit Criterion(int number) : number_(number) {}
  void fail(const std::string& why) {
    ok_ = false;
    if (!notes_.empty()) notes_ += "; ";
    notes_ += why;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  bool report(const std::string& title) const {
    std::cout << "criterion " << number_ << ": " << (ok_ ? "PASS" : "FAIL") << "  " << title;
    if (!info_.empty()) std::cout << " [" << info_ << "]";
    if (!ok_) std::cout << " -- " << notes_;
    std::cout << "\n";
    return ok_;
  }

 private:
  int number_;
  bool ok_ = true;
  std::string notes_, info_;
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

// Integer square root test by brute force bisection.
bool is_square(const Integer& d) {
  if (d < 0) return false;
  Integer lo = 0, hi = d + 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (mid * mid <= d)
      lo = mid;
    else
      hi = mid;
  }
  return lo * lo == d;
}

// Resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) of
// x^4 + a x^3 + b x^2 + c x + d, tested for integer roots over all divisors
// of its constant term.
bool cubic_resolvent_has_rational_root(const IntPolynomial& f) {
  const Integer a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  IntPolynomial r = IntPolynomial::from_descending({1, -b, a * c - 4 * d, -(a * a * d - 4 * b * d + c * c)});
  Integer c0 = abs(r.coeff(0));
  if (c0 == 0) return true;
  for (Integer k = 1; k * k <= c0; ++k) {
    if (c0 % k != 0) continue;
    for (const Integer& t : {k, Integer(c0 / k)})
      for (int sign : {1, -1})
        if (r.evaluate(Integer(sign * t)) == 0) return true;
  }
  return false;
}

// Brute force: sigma is in the group iff sum_k n_k x_{sigma(k)} is a root of
// G.  Roots of f and of G are isolated directly; a match is accepted only
// when every root ball of G meets exactly one of the 24 weighted sums.
std::optional<std::set<Permutation>> oracle_group(const ResolventData& rd) {
  const std::size_t n = rd.degree();
  const auto perms = all_permutations(n);
  for (mpfr_prec_t prec = 128; prec <= 8192; prec *= 2) {
    RootSet xs = isolate_roots(rd.f, prec);
    RootSet gs = isolate_roots(rd.G, prec);
    std::vector<ComplexBall> V;
    for (const auto& s : perms) {
      ComplexBall acc = ComplexBall::exact(Integer(0), prec);
      for (std::size_t k = 0; k < n; ++k) acc = acc + ComplexBall::exact(rd.weights[k], prec) * xs[s(k)];
      V.push_back(acc);
    }
    if (!certified_distinct(V)) continue;
    std::set<Permutation> kept;
    bool clean = true;
    for (const auto& g : gs.balls) {
      std::vector<std::size_t> hits;
      for (std::size_t i = 0; i < V.size(); ++i)
        if (!certainly_disjoint(g, V[i])) hits.push_back(i);
      if (hits.size() != 1) {
        clean = false;
        break;
      }
      kept.insert(perms[hits[0]]);
    }
    if (clean && kept.size() == gs.size()) return kept;
  }
  return std::nullopt;
}

RatPolynomial random_polynomial(std::mt19937_64& rng) {
  const std::size_t deg = rng() % 9;
  std::vector<Rational> c(deg + 1);
  for (auto& q : c) {
    const long num = static_cast<long>(rng() % 201) - 100;
    const long den = rng() % 3 == 0 ? static_cast<long>(rng() % 12) + 1 : 1;
    q = make_rational(num, den);
  }
  return RatPolynomial(c);
}

}  // namespace

int main() {
  std::vector<Timed> runs;
  std::string run_error;
  for (const auto& item : kCorpus) {
    try {
      runs.push_back(run(item.text));
    } catch (const std::exception& e) {
      run_error = item.text + ": " + e.what();
      break;
    }
  }
  const bool all_ran = runs.size() == kCorpus.size();
  int failures = 0;

  {  // 1. Exact reconstruction identities, under a second per quartic.
    Criterion c(1);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const ResolventData& rd = runs[i].report.data;
      FieldElement sum = FieldElement::constant(rd.modulus, 0);
      for (std::size_t k = 0; k < rd.R.size(); ++k) {
        if (!poly_compose_mod(to_rational(rd.f), rd.R[k]).is_zero()) c.fail(kCorpus[i].text + ": f(R_k) != 0");
        sum += rd.R[k] * Rational(rd.weights[k]);
      }
      if (sum != FieldElement::generator(rd.modulus)) c.fail(kCorpus[i].text + ": sum n_k R_k != v");
      if (rd.degree() == 4) {
        if (runs[i].seconds >= 1.0) c.fail(kCorpus[i].text + " took " + fmt_seconds(runs[i].seconds));
        c.note(kCorpus[i].text + " " + fmt_seconds(runs[i].seconds));
      }
    }
    failures += !c.report("sum n_k R_k = v and f(R_k) = 0 mod G; quartics under 1 s");
  }

  {  // 2. gcd(F, F') = 1.
    Criterion c(2);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const IntPolynomial& F = runs[i].report.data.F;
      if (poly_gcd(to_rational(F), to_rational(F.derivative())) != RatPolynomial::constant(1))
        c.fail(kCorpus[i].text + ": F not squarefree");
    }
    failures += !c.report("resolvent F is squarefree for every accepted weight tuple");
  }

  {  // 3. Closure table.
    Criterion c(3);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const SubstitutionGroup& g = *runs[i].report.group;
      const std::size_t m = g.order();
      const auto& t = g.cayley;
      bool ok = t.size() == m;
      for (std::size_t a = 0; ok && a < m; ++a) {
        ok = t[a].size() == m && t[0][a] == a && t[a][0] == a;
        std::set<std::size_t> row(t[a].begin(), t[a].end());
        ok = ok && row.size() == m && *row.rbegin() < m;
        bool has_inverse = false;
        for (std::size_t b = 0; ok && b < m; ++b) {
          ok = g.elements[t[a][b]].mapping == g.elements[a].mapping * g.elements[b].mapping;
          has_inverse = has_inverse || (t[a][b] == 0 && t[b][a] == 0);
        }
        ok = ok && has_inverse;
      }
      if (!ok || !g.elements[0].mapping.is_identity()) c.fail(kCorpus[i].text + ": bad Cayley table");
    }
    failures += !c.report("substitutions form a group: total table, identity row, inverses");
  }

  {  // 4. Fundamental theorem checks with 32 samples, seed 0.
    Criterion c(4);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const RunReport& r = runs[i].report;
      if (!r.verification || !r.verification->all_passed()) {
        c.fail(kCorpus[i].text + ": verification failed");
        continue;
      }
      const auto& gr = r.verification->group_resolvent;
      if (!gr || gr->stabilizer != r.group->permutations())
        c.fail(kCorpus[i].text + ": stabilizer of alpha differs from the group");
    }
    failures += !c.report("properties I, II, IV hold and Stab(alpha) = group");
  }

  {  // 5. Desk corpus with independent discriminant and cubic resolvent checks.
    Criterion c(5);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const RunReport& r = runs[i].report;
      const CorpusItem& item = kCorpus[i];
      if (r.identity.name != item.group || r.identity.order != item.order)
        c.fail(item.text + ": got " + r.identity.name);
      if (runs[i].seconds >= 60) c.fail(item.text + " took " + fmt_seconds(runs[i].seconds));
      const IntPolynomial& f = r.data.f;
      const bool square = is_square(discriminant(f));
      if (item.group == "S3" && square) c.fail("disc(x^3 - 2) is a square");
      if (item.group == "C3" && !square) c.fail("disc of the cyclic cubic is not a square");
      if (item.group == "A4" && (!square || cubic_resolvent_has_rational_root(f)))
        c.fail("A4 oracle disagrees");
      if (item.group == "S4" && (square || cubic_resolvent_has_rational_root(f))) c.fail("S4 oracle disagrees");
    }
    double total = 0;
    for (const auto& t : runs) total += t.seconds;
    c.note("total " + fmt_seconds(total));
    failures += !c.report("desk corpus groups, each under 60 s");
  }

  {  // 6. x^4 + x + 1: G = F and all 24 arrangements.
    Criterion c(6);
    if (!all_ran) c.fail(run_error);
    if (all_ran) {
      const RunReport& r = runs.back().report;
      if (r.data.G.degree() != 24) c.fail("deg G = " + std::to_string(r.data.G.degree()));
      if (r.data.G != r.data.F) c.fail("G != F");
      if (r.group->permutations() != all_permutations(4)) c.fail("scheme misses arrangements");
    }
    failures += !c.report("x^4 + x + 1 has deg G = 24 = deg F and all 24 permutations");
  }

  {  // 7. Determinism.
    Criterion c(7);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const std::string a = report_json(runs[i].report, false).dump();
      const std::string b = report_json(run(kCorpus[i].text).report, false).dump();
      if (a != b) c.fail(kCorpus[i].text + ": reports differ");
    }
    failures += !c.report("repeated runs give identical JSON");
  }

  {  // 8. Brute-force oracle for the quartics.
    Criterion c(8);
    if (!all_ran) c.fail(run_error);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const RunReport& r = runs[i].report;
      if (r.data.degree() != 4) continue;
      auto expect = oracle_group(r.data);
      if (!expect) {
        c.fail(kCorpus[i].text + ": oracle could not separate the roots");
        continue;
      }
      const auto got = r.group->permutations();
      if (std::set<Permutation>(got.begin(), got.end()) != *expect) c.fail(kCorpus[i].text + ": sets differ");
    }
    failures += !c.report("extracted groups match the brute-force permutation oracle");
  }

  {  // 9. Parser round trip.
    Criterion c(9);
    std::mt19937_64 rng(20240601);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const RatPolynomial p = random_polynomial(rng);
      try {
        if (parse_polynomial(to_string(p)) != p) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
    if (bad) c.fail(std::to_string(bad) + " of 1000 failed");
    c.note("1000 polynomials");
    failures += !c.report("print and reparse gives the same polynomial");
  }

  return failures;
}
