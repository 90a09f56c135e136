// Serial vs OpenMP kernels on the S4 quartic x^4 + x + 1.

#include <benchmark/benchmark.h>

#include "galois/kernels.hpp"
#include "galois/resolvent.hpp"

using namespace galois;

namespace {

struct Fixture {
  RootSet roots;
  std::vector<Permutation> perms;
  std::vector<Integer> w{1, 2, 3, 4};
  std::vector<ComplexBall> V;
  IntPolynomial F;
  RootSet roots_V;
  std::vector<std::vector<std::size_t>> candidates;

  Fixture() {
    roots = isolate_roots(IntPolynomial::from_descending({1, 0, 0, 1, 1}), 512);
    perms = all_permutations(4);
    V = kernels::serial::weighted_sums(roots.balls, w, perms);
    WeightTuple wt{w};
    ResolventExpansion ex = expand_resolvent(roots, wt);
    F = ex.F;
    roots_V = ex.roots_V;
    // All 4-subsets containing root 0, none of which divides the irreducible F.
    for (std::size_t a = 1; a < 24; ++a)
      for (std::size_t b = a + 1; b < 24; ++b)
        for (std::size_t c = b + 1; c < 24; ++c) candidates.push_back({0, a, b, c});
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

template <bool Parallel>
void BM_WeightedSums(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weighted_sums(f.roots.balls, f.w, f.perms, Parallel));
}

template <bool Parallel>
void BM_LagrangeNumerators(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::lagrange_numerators(f.roots.balls, f.V, f.perms, Parallel));
}

template <bool Parallel>
void BM_ScanCandidates(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::scan_candidates(f.F, f.roots_V.balls, f.candidates, Parallel));
}

template <bool Parallel>
void BM_BatchedProducts(benchmark::State& state) {
  const auto& f = fixture();
  ModulusPtr G = make_modulus(f.F);
  std::vector<std::vector<FieldElement>> lists;
  for (int i = 0; i < 24; ++i) {
    std::vector<FieldElement> l;
    for (int j = 0; j < 4; ++j)
      l.emplace_back(G, RatPolynomial({Rational(i - j), Rational(j + 1), Rational(i + 2 * j), Rational(1)}));
    lists.push_back(std::move(l));
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::batched_products(lists, Parallel));
}

}  // namespace

BENCHMARK(BM_WeightedSums<false>)->Name("weighted_sums/serial");
BENCHMARK(BM_WeightedSums<true>)->Name("weighted_sums/omp");
BENCHMARK(BM_LagrangeNumerators<false>)->Name("lagrange_numerators/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LagrangeNumerators<true>)->Name("lagrange_numerators/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanCandidates<false>)->Name("scan_candidates/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanCandidates<true>)->Name("scan_candidates/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchedProducts<false>)->Name("batched_products/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchedProducts<true>)->Name("batched_products/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
