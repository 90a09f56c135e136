#ifndef GALOIS_PIPELINE_HPP
#define GALOIS_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "galois/factorizer.hpp"
#include "galois/fixed_field.hpp"

namespace galois {

struct RunOptions {
  mpfr_prec_t precision_bits = 128;
  mpfr_prec_t max_precision_bits = 16384;
  long max_weight = 64;
  int degree_limit = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 32;
  bool verify = true;
  bool parallel = true;
  /// Subgroup of S_n for the fixed-field stage, in the syntax of
  /// parse_subgroup.
  std::optional<std::string> subgroup;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct RunReport {
  std::string input_text;
  RatPolynomial input;
  bool squarefree_reduced = false;  // input had repeated roots
  RatPolynomial squarefree;
  ResolventData data;
  bool used_fallback = false;
  std::optional<SubstitutionGroup> group;
  GroupIdentity identity;
  Integer discriminant;
  bool discriminant_square = false;
  std::optional<VerificationReport> verification;
  std::optional<SubgroupSpec> subgroup;
  std::optional<SubgroupResolvent> subgroup_resolvent;
  std::vector<StageTiming> timings;
};

/// Normalize, isolate roots, choose weights, build F, factor out G, derive
/// R_k, extract and identify the group, then verify properties I-IV.  Errors
/// keep their code and name the failing stage.
RunReport run_pipeline(const RatPolynomial& f, const RunOptions& options = {}, const std::string& input_text = "");

}  // namespace galois

#endif  // GALOIS_PIPELINE_HPP
