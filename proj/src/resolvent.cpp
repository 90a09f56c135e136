#include "galois/resolvent.hpp"

#include <functional>
#include <map>

#include "galois/kernels.hpp"

namespace galois {

namespace {

void pollard_factor(const Integer& n, std::map<Integer, int>& out);

void record_prime_or_split(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  pollard_factor(n, out);
}

// Pollard rho with Floyd cycle detection; n composite.
void pollard_factor(const Integer& n, std::map<Integer, int>& out) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(Integer(x - y));
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) {
      record_prime_or_split(d, out);
      record_prime_or_split(Integer(n / d), out);
      return;
    }
  }
}

std::map<Integer, int> factor_integer(Integer n) {
  std::map<Integer, int> out;
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) record_prime_or_split(n, out);
  return out;
}

// Calls visit(tuple) on distinct-entry tuples over 1..top that contain top,
// in lexicographic order, until visit returns true.
bool enumerate_with_max(std::size_t n, long top, std::vector<long>& cur, std::vector<bool>& used,
                        bool have_top, const std::function<bool(const std::vector<long>&)>& visit) {
  if (cur.size() == n) return have_top && visit(cur);
  const std::size_t remaining = n - cur.size();
  if (!have_top && remaining == 0) return false;
  for (long v = 1; v <= top; ++v) {
    if (used[v]) continue;
    if (!have_top && remaining == 1 && v != top) continue;
    used[v] = true;
    cur.push_back(v);
    const bool stop = enumerate_with_max(n, top, cur, used, have_top || v == top, visit);
    cur.pop_back();
    used[v] = false;
    if (stop) return true;
  }
  return false;
}

WeightTuple to_weights(const std::vector<long>& v) {
  WeightTuple w;
  for (long x : v) w.values.emplace_back(x);
  return w;
}

std::vector<Permutation> perms_for(const RootSet& roots) { return all_permutations(roots.size()); }

}  // namespace

NormalizedPolynomial normalize_monic_integral(const RatPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "normalization needs degree >= 1");
  const std::size_t n = f.degree();
  const Rational lead = f.leading();
  std::vector<Rational> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = f.coeff(i) / lead;

  // c^(n-i) must absorb the denominator of a_i.
  std::map<Integer, int> need;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0 || a[i].get_den() == 1) continue;
    const std::size_t power = n - i;
    for (const auto& [p, e] : factor_integer(a[i].get_den())) {
      const int req = static_cast<int>((e + power - 1) / power);
      need[p] = std::max(need[p], req);
    }
  }
  Integer c = 1;
  for (const auto& [p, e] : need) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    c *= pe;
  }
  std::vector<Integer> g(n + 1);
  Integer cp = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    Rational v = a[i] * cp;
    if (v.get_den() != 1) throw Error(ErrorCode::InternalError, "normalization scale is not integral");
    g[i] = v.get_num();
    cp *= c;
  }
  return {IntPolynomial(std::move(g)), c};
}

std::vector<ComplexBall> weighted_sum_balls(const RootSet& roots, const WeightTuple& w, bool parallel) {
  return kernels::weighted_sums(roots.balls, w.values, perms_for(roots), parallel);
}

WeightTuple choose_weights(const RootSet& roots, const WeightSearchOptions& options) {
  const std::size_t n = roots.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "no roots");
  if (!certified_distinct(roots.balls)) throw Error(ErrorCode::NotSquarefree, "roots are not certified distinct");

  std::optional<RootSet> finer;  // roots at twice the precision, built on demand
  auto passes = [&](const WeightTuple& w) {
    if (certified_distinct(weighted_sum_balls(roots, w, options.parallel))) return true;
    // One escalation step separates genuinely distinct sums that were merely
    // close; sums that still overlap are treated as coincident.
    const mpfr_prec_t p2 = roots.precision_bits * 2;
    if (p2 > options.max_bits) return false;
    if (!finer) finer = refine(roots, p2, options.max_bits);
    return certified_distinct(weighted_sum_balls(*finer, w, options.parallel));
  };

  std::vector<long> first(n);
  for (std::size_t k = 0; k < n; ++k) first[k] = static_cast<long>(k + 1);
  if (passes(to_weights(first))) return to_weights(first);

  std::optional<WeightTuple> found;
  for (long top = static_cast<long>(n); top <= options.max_weight && !found; ++top) {
    std::vector<long> cur;
    std::vector<bool> used(top + 1, false);
    enumerate_with_max(n, top, cur, used, false, [&](const std::vector<long>& t) {
      if (t == first) return false;
      WeightTuple w = to_weights(t);
      if (!passes(w)) return false;
      found = std::move(w);
      return true;
    });
  }
  if (!found)
    throw Error(ErrorCode::SearchExhausted,
                "no weight tuple with entries <= " + std::to_string(options.max_weight) + " separates the sums");
  return *found;
}

ResolventExpansion expand_resolvent(const RootSet& roots, const WeightTuple& w, const PrecisionPolicy& policy,
                                    bool parallel) {
  for (mpfr_prec_t p = std::max(roots.precision_bits, policy.initial_bits); p <= policy.max_bits; p *= 2) {
    RootSet rs = p > roots.precision_bits ? refine(roots, p, policy.max_bits) : roots;
    std::vector<ComplexBall> V = weighted_sum_balls(rs, w, parallel);
    if (!certified_distinct(V))
      throw Error(ErrorCode::CertificateFailed, "weighted sums are not certified distinct");
    RoundedPolynomial rounded = round_to_integers(kernels::linear_product(V, p));
    if (rounded.status == IntegerCertificate::Inconclusive) continue;
    if (rounded.status == IntegerCertificate::NotInteger)
      throw Error(ErrorCode::CertificateFailed, "resolvent coefficient ball excludes every integer");
    IntPolynomial F = std::move(rounded.poly);
    if (F.degree() != static_cast<int>(V.size()) || F.leading() != 1)
      throw Error(ErrorCode::CertificateFailed, "resolvent is not monic of degree n!");
    if (!is_squarefree(F)) throw Error(ErrorCode::CertificateFailed, "gcd(F, F') != 1");
    const mpfr_prec_t used = rs.precision_bits;
    return {F, std::move(rs), RootSet{F, std::move(V), used}};
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "resolvent coefficients not certified within " + std::to_string(policy.max_bits) + " bits");
}

std::vector<IntPolynomial> build_lagrange_numerators(const RootSet& roots, const WeightTuple& w,
                                                     const IntPolynomial& F, const PrecisionPolicy& policy,
                                                     bool parallel) {
  const auto perms = perms_for(roots);
  for (mpfr_prec_t p = std::max(roots.precision_bits, policy.initial_bits); p <= policy.max_bits; p *= 2) {
    RootSet rs = p > roots.precision_bits ? refine(roots, p, policy.max_bits) : roots;
    std::vector<ComplexBall> V = weighted_sum_balls(rs, w, parallel);
    std::vector<BallPolynomial> Hb = kernels::lagrange_numerators(rs.balls, V, perms, parallel);
    std::vector<IntPolynomial> H;
    bool retry = false;
    for (const auto& hb : Hb) {
      RoundedPolynomial r = round_to_integers(hb);
      if (r.status == IntegerCertificate::Inconclusive) {
        retry = true;
        break;
      }
      if (r.status == IntegerCertificate::NotInteger)
        throw Error(ErrorCode::CertificateFailed, "Lagrange numerator coefficient excludes every integer");
      if (r.poly.degree() >= F.degree())
        throw Error(ErrorCode::CertificateFailed, "Lagrange numerator degree too large");
      H.push_back(std::move(r.poly));
    }
    if (!retry) return H;
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "Lagrange numerators not certified within " + std::to_string(policy.max_bits) + " bits");
}

std::vector<FieldElement> root_expressions(const IntPolynomial& F, const ModulusPtr& G,
                                           const std::vector<IntPolynomial>& H, const WeightTuple& w,
                                           const IntPolynomial& f) {
  if (!divides_exactly(G->poly(), F)) throw Error(ErrorCode::CertificateFailed, "G does not divide F");
  std::optional<FieldElement> inv;
  try {
    inv = mod_inverse(FieldElement(G, to_rational(F.derivative())));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvertible) throw;
    throw Error(ErrorCode::CertificateFailed, std::string("F' not invertible modulo G: ") + e.what());
  }
  std::vector<FieldElement> R;
  R.reserve(H.size());
  for (const auto& h : H) R.push_back(FieldElement(G, to_rational(h)) * *inv);

  const RatPolynomial fr = to_rational(f);
  FieldElement sum = FieldElement::constant(G, 0);
  for (std::size_t k = 0; k < R.size(); ++k) {
    if (!poly_compose_mod(fr, R[k]).is_zero())
      throw Error(ErrorCode::CertificateFailed, "f(R_" + std::to_string(k + 1) + ") != 0 mod G");
    sum += R[k] * Rational(w[k]);
    for (std::size_t j = 0; j < k; ++j)
      if (R[j] == R[k]) throw Error(ErrorCode::CertificateFailed, "two root expressions coincide");
  }
  if (sum != FieldElement::generator(G))
    throw Error(ErrorCode::CertificateFailed, "sum_k n_k R_k != v mod G");
  return R;
}

}  // namespace galois
