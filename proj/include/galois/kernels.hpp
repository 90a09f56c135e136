#ifndef GALOIS_KERNELS_HPP
#define GALOIS_KERNELS_HPP

// Data-parallel inner loops of the pipeline.  Each kernel has a serial
// reference implementation and an OpenMP one; both produce bit-identical
// results because every parallel iteration writes its own slot and all
// reductions run afterwards in index order.

#include <optional>
#include <span>
#include <vector>

#include "galois/ball.hpp"
#include "galois/field_element.hpp"
#include "galois/permutation.hpp"

namespace galois::kernels {

/// prod_i (v - roots[i]) in ball arithmetic, ascending coefficients.
BallPolynomial linear_product(std::span<const ComplexBall> roots, mpfr_prec_t prec);

enum class CandidateStatus { Divisor, Rejected, Inconclusive };

struct CandidateResult {
  CandidateStatus status = CandidateStatus::Rejected;
  IntPolynomial divisor;  // set when status == Divisor
};

/// Expand prod_{i in subset}(v - V_i), certify integer coefficients and
/// confirm by exact trial division into F.
CandidateResult test_candidate(const IntPolynomial& F, std::span<const ComplexBall> V,
                               const std::vector<std::size_t>& subset);

struct ScanResult {
  std::optional<std::size_t> first;  // least candidate index that divides F
  IntPolynomial divisor;
  bool inconclusive = false;  // some candidate needs more precision
};

namespace serial {

/// V_sigma = sum_k w_k x_{sigma(k)} for every sigma in perms.
std::vector<ComplexBall> weighted_sums(std::span<const ComplexBall> x, const std::vector<Integer>& w,
                                       const std::vector<Permutation>& perms);

/// H_k(v) = sum_sigma x_{sigma(k)} prod_{tau != sigma} (v - V_tau), k = 0..n-1.
std::vector<BallPolynomial> lagrange_numerators(std::span<const ComplexBall> x,
                                                std::span<const ComplexBall> V,
                                                const std::vector<Permutation>& perms);

ScanResult scan_candidates(const IntPolynomial& F, std::span<const ComplexBall> V,
                           const std::vector<std::vector<std::size_t>>& candidates);

/// Product of each factor list.
std::vector<FieldElement> batched_products(const std::vector<std::vector<FieldElement>>& lists);

}  // namespace serial

namespace omp {

std::vector<ComplexBall> weighted_sums(std::span<const ComplexBall> x, const std::vector<Integer>& w,
                                       const std::vector<Permutation>& perms);

std::vector<BallPolynomial> lagrange_numerators(std::span<const ComplexBall> x,
                                                std::span<const ComplexBall> V,
                                                const std::vector<Permutation>& perms);

ScanResult scan_candidates(const IntPolynomial& F, std::span<const ComplexBall> V,
                           const std::vector<std::vector<std::size_t>>& candidates);

std::vector<FieldElement> batched_products(const std::vector<std::vector<FieldElement>>& lists);

}  // namespace omp

/// Dispatch helpers used by the pipeline.
std::vector<ComplexBall> weighted_sums(std::span<const ComplexBall> x, const std::vector<Integer>& w,
                                       const std::vector<Permutation>& perms, bool parallel);
std::vector<BallPolynomial> lagrange_numerators(std::span<const ComplexBall> x,
                                                std::span<const ComplexBall> V,
                                                const std::vector<Permutation>& perms, bool parallel);
ScanResult scan_candidates(const IntPolynomial& F, std::span<const ComplexBall> V,
                           const std::vector<std::vector<std::size_t>>& candidates, bool parallel);
std::vector<FieldElement> batched_products(const std::vector<std::vector<FieldElement>>& lists,
                                           bool parallel);

}  // namespace galois::kernels

#endif  // GALOIS_KERNELS_HPP
