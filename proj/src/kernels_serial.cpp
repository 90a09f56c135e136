#include "galois/kernels.hpp"

namespace galois::kernels {

BallPolynomial linear_product(std::span<const ComplexBall> roots, mpfr_prec_t prec) {
  BallPolynomial poly{ComplexBall::exact(Integer(1), prec)};
  for (const auto& r : roots) multiply_linear(poly, r);
  return poly;
}

CandidateResult test_candidate(const IntPolynomial& F, std::span<const ComplexBall> V,
                               const std::vector<std::size_t>& subset) {
  const mpfr_prec_t prec = V.empty() ? 128 : V[0].prec();
  BallPolynomial poly{ComplexBall::exact(Integer(1), prec)};
  for (auto i : subset) multiply_linear(poly, V[i]);
  RoundedPolynomial rounded = round_to_integers(poly);
  switch (rounded.status) {
    case IntegerCertificate::NotInteger:
      return {CandidateStatus::Rejected, {}};
    case IntegerCertificate::Inconclusive:
      return {CandidateStatus::Inconclusive, {}};
    case IntegerCertificate::Integer:
      break;
  }
  if (!divides_exactly(rounded.poly, F)) return {CandidateStatus::Rejected, {}};
  return {CandidateStatus::Divisor, std::move(rounded.poly)};
}

namespace serial {

std::vector<ComplexBall> weighted_sums(std::span<const ComplexBall> x, const std::vector<Integer>& w,
                                       const std::vector<Permutation>& perms) {
  const mpfr_prec_t prec = x[0].prec();
  std::vector<ComplexBall> out;
  out.reserve(perms.size());
  for (const auto& sigma : perms) {
    ComplexBall acc(prec);
    for (std::size_t k = 0; k < w.size(); ++k) acc += ComplexBall::exact(w[k], prec) * x[sigma(k)];
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<BallPolynomial> lagrange_numerators(std::span<const ComplexBall> x,
                                                std::span<const ComplexBall> V,
                                                const std::vector<Permutation>& perms) {
  const std::size_t n = x.size(), r = V.size();
  const mpfr_prec_t prec = V[0].prec();
  std::vector<BallPolynomial> H(n, BallPolynomial(r, ComplexBall(prec)));
  for (std::size_t s = 0; s < r; ++s) {
    BallPolynomial others{ComplexBall::exact(Integer(1), prec)};
    for (std::size_t t = 0; t < r; ++t)
      if (t != s) multiply_linear(others, V[t]);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < r; ++j) H[k][j] += x[perms[s](k)] * others[j];
  }
  return H;
}

ScanResult scan_candidates(const IntPolynomial& F, std::span<const ComplexBall> V,
                           const std::vector<std::vector<std::size_t>>& candidates) {
  ScanResult result;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    CandidateResult t = test_candidate(F, V, candidates[c]);
    if (t.status == CandidateStatus::Divisor) {
      result.first = c;
      result.divisor = std::move(t.divisor);
      return result;
    }
    if (t.status == CandidateStatus::Inconclusive) result.inconclusive = true;
  }
  return result;
}

std::vector<FieldElement> batched_products(const std::vector<std::vector<FieldElement>>& lists) {
  std::vector<FieldElement> out;
  out.reserve(lists.size());
  for (const auto& list : lists) {
    FieldElement acc = list.front();
    for (std::size_t i = 1; i < list.size(); ++i) acc *= list[i];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace serial

std::vector<ComplexBall> weighted_sums(std::span<const ComplexBall> x, const std::vector<Integer>& w,
                                       const std::vector<Permutation>& perms, bool parallel) {
  return parallel ? omp::weighted_sums(x, w, perms) : serial::weighted_sums(x, w, perms);
}

std::vector<BallPolynomial> lagrange_numerators(std::span<const ComplexBall> x,
                                                std::span<const ComplexBall> V,
                                                const std::vector<Permutation>& perms, bool parallel) {
  return parallel ? omp::lagrange_numerators(x, V, perms) : serial::lagrange_numerators(x, V, perms);
}

ScanResult scan_candidates(const IntPolynomial& F, std::span<const ComplexBall> V,
                           const std::vector<std::vector<std::size_t>>& candidates, bool parallel) {
  return parallel ? omp::scan_candidates(F, V, candidates) : serial::scan_candidates(F, V, candidates);
}

std::vector<FieldElement> batched_products(const std::vector<std::vector<FieldElement>>& lists,
                                           bool parallel) {
  return parallel ? omp::batched_products(lists) : serial::batched_products(lists);
}

}  // namespace galois::kernels
