#include <benchmark/benchmark.h>

#include "ceq/harmonic.hpp"
#include "ceq/invariants.hpp"
#include "ceq/quantizer.hpp"
#include "ceq/sampling.hpp"
#include "ceq/star_product.hpp"

namespace {

using namespace ceq;

SymbolPolynomial bench_symbol(int n, int xi_deg) {
  Sampler sampler(99);
  return sampler.random_symbol(n, xi_deg, 3, 12);
}

void BM_QuantizeTilde(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n, 0);
  const Weights w(Rational(1, 3), Rational(2, 5));
  const SymbolPolynomial p = bench_symbol(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(quantize_tilde(p, w, sig));
}
BENCHMARK(BM_QuantizeTilde)->Arg(2)->Arg(3);

void BM_HarmonicDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n, 0);
  const SymbolPolynomial p = bench_symbol(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_decompose(p, sig));
}
BENCHMARK(BM_HarmonicDecompose)->Arg(2)->Arg(3);

void BM_EndoCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n, 0);
  const EndoOperator c = casimir_operators(sig, Weights(Rational(1, 2), Rational(1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(endo_compose(c, c));
}
BENCHMARK(BM_EndoCompose)->Arg(2)->Arg(3);

void BM_Star(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n, 0);
  Sampler sampler(7);
  const SymbolPolynomial p = sampler.random_symbol(n, 3, 2, 6);
  const SymbolPolynomial q = sampler.random_symbol(n, 3, 2, 6);
  const StarTruncation cfg{2, Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(star(p, q, cfg, sig));
}
BENCHMARK(BM_Star)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
