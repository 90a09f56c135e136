#include <omp.h>

#include <atomic>
#include <climits>

#include "galois/kernels.hpp"

namespace galois::kernels::omp {

std::vector<ComplexBall> weighted_sums(std::span<const ComplexBall> x, const std::vector<Integer>& w,
                                       const std::vector<Permutation>& perms) {
  const mpfr_prec_t prec = x[0].prec();
  const long count = static_cast<long>(perms.size());
  std::vector<ComplexBall> out(perms.size(), ComplexBall(prec));
#pragma omp parallel for schedule(static)
  for (long s = 0; s < count; ++s) {
    ComplexBall acc(prec);
    for (std::size_t k = 0; k < w.size(); ++k) acc += ComplexBall::exact(w[k], prec) * x[perms[s](k)];
    out[s] = std::move(acc);
  }
  return out;
}

std::vector<BallPolynomial> lagrange_numerators(std::span<const ComplexBall> x,
                                                std::span<const ComplexBall> V,
                                                const std::vector<Permutation>& perms) {
  const std::size_t n = x.size(), r = V.size();
  const mpfr_prec_t prec = V[0].prec();
  // terms[s][k] = x_{sigma_s(k)} * prod_{t != s} (v - V_t)
  std::vector<std::vector<BallPolynomial>> terms(r);
  const long count = static_cast<long>(r);
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < count; ++s) {
    BallPolynomial others{ComplexBall::exact(Integer(1), prec)};
    for (std::size_t t = 0; t < r; ++t)
      if (t != static_cast<std::size_t>(s)) multiply_linear(others, V[t]);
    std::vector<BallPolynomial> local(n);
    for (std::size_t k = 0; k < n; ++k) {
      local[k].reserve(r);
      for (std::size_t j = 0; j < r; ++j) local[k].push_back(x[perms[s](k)] * others[j]);
    }
    terms[s] = std::move(local);
  }
  std::vector<BallPolynomial> H(n, BallPolynomial(r, ComplexBall(prec)));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < r; ++j) H[k][j] += terms[s][k][j];
  return H;
}

ScanResult scan_candidates(const IntPolynomial& F, std::span<const ComplexBall> V,
                           const std::vector<std::vector<std::size_t>>& candidates) {
  const long count = static_cast<long>(candidates.size());
  std::vector<CandidateResult> results(candidates.size());
  std::atomic<long> best{LONG_MAX};
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < count; ++c) {
    // Candidates after an already found divisor cannot change the answer.
    if (c > best.load(std::memory_order_relaxed)) continue;
    results[c] = test_candidate(F, V, candidates[c]);
    if (results[c].status == CandidateStatus::Divisor) {
      long cur = best.load();
      while (c < cur && !best.compare_exchange_weak(cur, c)) {
      }
    }
  }
  ScanResult out;
  const long stop = std::min(best.load(), count - 1);
  for (long c = 0; c <= stop; ++c) {
    if (results[c].status == CandidateStatus::Divisor) {
      out.first = static_cast<std::size_t>(c);
      out.divisor = std::move(results[c].divisor);
      return out;
    }
    if (results[c].status == CandidateStatus::Inconclusive) out.inconclusive = true;
  }
  return out;
}

std::vector<FieldElement> batched_products(const std::vector<std::vector<FieldElement>>& lists) {
  std::vector<std::optional<FieldElement>> slots(lists.size());
  const long count = static_cast<long>(lists.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    FieldElement acc = lists[i].front();
    for (std::size_t j = 1; j < lists[i].size(); ++j) acc *= lists[i][j];
    slots[i] = std::move(acc);
  }
  std::vector<FieldElement> out;
  out.reserve(lists.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace galois::kernels::omp
