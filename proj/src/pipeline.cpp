#include "galois/pipeline.hpp"

#include <chrono>

namespace galois {

namespace {

template <class Fn>
auto stage(RunReport& report, const char* name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto record = [&] {
    const auto stop = std::chrono::steady_clock::now();
    report.timings.push_back({name, std::chrono::duration<double, std::milli>(stop - start).count()});
  };
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record();
    } else {
      auto result = fn();
      record();
      return result;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), std::string(name) + ": " + e.detail());
  }
}

}  // namespace

RunReport run_pipeline(const RatPolynomial& f, const RunOptions& options, const std::string& input_text) {
  if (options.degree_limit < 2 || options.degree_limit > 5)
    throw Error(ErrorCode::InvalidInput, "degree limit must be between 2 and 5");
  if (f.degree() < 2 || f.degree() > options.degree_limit)
    throw Error(ErrorCode::InvalidInput, "degree " + std::to_string(f.degree()) + " outside 2.." +
                                             std::to_string(options.degree_limit));
  const PrecisionPolicy policy{options.precision_bits, options.max_precision_bits};
  if (policy.initial_bits < 16 || policy.max_bits < policy.initial_bits)
    throw Error(ErrorCode::InvalidInput, "precision bounds must satisfy 16 <= initial <= max");

  RunReport report;
  report.input_text = input_text;
  report.input = f;
  ResolventData& rd = report.data;

  stage(report, "normalize", [&] {
    report.squarefree = f;
    if (!is_squarefree(f)) {
      report.squarefree_reduced = true;
      report.squarefree = squarefree_part(f);
    }
    NormalizedPolynomial np = normalize_monic_integral(report.squarefree);
    rd.f = std::move(np.poly);
    rd.scale = std::move(np.scale);
  });
  const std::size_t n = rd.degree();

  stage(report, "roots", [&] { rd.roots_f = isolate_roots(rd.f, policy.initial_bits, policy.max_bits); });

  stage(report, "weights", [&] {
    rd.weights = choose_weights(rd.roots_f, {options.max_weight, policy.max_bits, options.parallel});
  });

  stage(report, "resolvent", [&] {
    ResolventExpansion ex = expand_resolvent(rd.roots_f, rd.weights, policy, options.parallel);
    rd.F = std::move(ex.F);
    rd.roots_f = std::move(ex.roots_f);
    rd.roots_V = std::move(ex.roots_V);
    rd.labels = all_permutations(n);
  });

  stage(report, "irreducibility", [&] { rd.f_irreducible = certify_irreducible(rd.f, policy); });

  stage(report, "factor", [&] {
    FactorOptions fo;
    fo.labels = rd.labels;
    fo.f_irreducible = rd.f_irreducible;
    fo.n = n;
    fo.policy = policy;
    fo.parallel = options.parallel;
    RootSet latest_f = rd.roots_f;
    fo.refine_roots = [&](mpfr_prec_t bits) {
      latest_f = refine(rd.roots_f, bits, policy.max_bits);
      return RootSet{rd.F, weighted_sum_balls(latest_f, rd.weights, options.parallel), bits};
    };
    FactorResult fr = irreducible_factor_containing(rd.F, rd.roots_V, 0, fo);
    if (fr.roots_V.precision_bits != rd.roots_V.precision_bits) {
      rd.roots_f = std::move(latest_f);
      rd.roots_V = std::move(fr.roots_V);
    }
    rd.G = std::move(fr.G);
    rd.subset = std::move(fr.subset);
    rd.modulus = make_modulus(rd.G);
    report.used_fallback = fr.used_fallback;
  });

  stage(report, "root_expressions", [&] {
    // Exact certificates decide; a failure means a rounding slipped through,
    // so rebuild from finer balls.
    for (mpfr_prec_t p = rd.roots_f.precision_bits;; p *= 2) {
      try {
        PrecisionPolicy local{p, policy.max_bits};
        rd.H = build_lagrange_numerators(rd.roots_f, rd.weights, rd.F, local, options.parallel);
        rd.R = root_expressions(rd.F, rd.modulus, rd.H, rd.weights, rd.f);
        return;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CertificateFailed || p * 2 > policy.max_bits) throw;
      }
    }
  });

  stage(report, "group", [&] {
    SubstitutionGroup g = extract_substitutions(rd, policy);
    certify_closure(g);
    report.discriminant = discriminant(rd.f);
    report.discriminant_square = discriminant_is_square(rd.f);
    report.identity = identify_group(g, report.discriminant_square);
    if (report.identity.transitive != rd.f_irreducible)
      throw Error(ErrorCode::CertificateFailed, std::string("group is ") +
                                                    (report.identity.transitive ? "" : "not ") +
                                                    "transitive but f is " + (rd.f_irreducible ? "" : "not ") +
                                                    "irreducible");
    if (g.order() != rd.m()) throw Error(ErrorCode::CertificateFailed, "group order differs from deg G");
    report.group = std::move(g);
  });

  if (options.verify) {
    stage(report, "verify", [&] {
      report.verification = verify_fundamental_theorem(rd, *report.group, options.samples, options.seed,
                                                       options.parallel);
    });
  }

  if (options.subgroup) {
    stage(report, "fixed_field", [&] {
      report.subgroup = parse_subgroup(*options.subgroup, n);
      report.subgroup_resolvent = subgroup_resolvent(*report.subgroup, rd, *report.group, options.parallel);
    });
  }
  return report;
}

}  // namespace galois
