#include <benchmark/benchmark.h>

#include <random>

#include "nagsb/akivis.hpp"
#include "nagsb/cd_check.hpp"
#include "nagsb/gsbasis.hpp"

namespace {

using namespace nagsb;

AkivisAlgebra sample_algebra(std::size_t dim) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-2, 2);
  MultiplicationTable gamma(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t m = 0; m < dim; ++m) gamma.set(i, j, m, Coeff(entry(rng)));
  return akivis_from_algebra(gamma);
}

void BM_CheckGs(benchmark::State& state) {
  RelationSet s = build_presentation(sample_algebra(state.range(0))).relations();
  GsOptions opts{.threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(check_gs(s, opts));
}
BENCHMARK(BM_CheckGs)->DenseRange(1, 4);

void BM_NormalForm(benchmark::State& state) {
  AkivisAlgebra a = sample_algebra(3);
  RelationSet s = build_presentation(a).relations();
  std::mt19937_64 rng(11);
  std::vector<Poly> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(Poly::monomial(random_word(3, state.range(0), rng), Coeff(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(inputs[i++ % inputs.size()], s));
}
BENCHMARK(BM_NormalForm)->DenseRange(3, 9, 2);

void BM_CompleteFromFG(benchmark::State& state) {
  auto pres = build_presentation(sample_algebra(state.range(0)));
  std::vector<Poly> fg;
  for (const auto& r : pres.f) fg.push_back(r.relation);
  for (const auto& r : pres.g) fg.push_back(r.relation);
  RelationSet start(pres.alphabet, pres.field, fg);
  for (auto _ : state) benchmark::DoNotOptimize(complete(start, 3));
}
BENCHMARK(BM_CompleteFromFG)->DenseRange(1, 3);

}  // namespace
BENCHMARK_MAIN();
