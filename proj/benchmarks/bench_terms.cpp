#include <benchmark/benchmark.h>

#include "fibmod/fibmod.hpp"

using namespace fibmod;

namespace {

Ring mersenne61() { return RingDescriptor::integers_mod((mpz_class(1) << 61) - 1); }

void BM_TermIterate1D(benchmark::State& state) {
  const auto fib = Sequence1D::of(RecurrenceType::of(mersenne61(), {1, 1}), {0, 1});
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    const auto fresh = Sequence1D::of(fib.recurrence(), {0, 1});
    benchmark::DoNotOptimize(fresh.term(n));
  }
}
BENCHMARK(BM_TermIterate1D)->RangeMultiplier(10)->Range(100, 100000);

void BM_TermFast1D(benchmark::State& state) {
  const auto fib = Sequence1D::of(RecurrenceType::of(mersenne61(), {1, 1}), {0, 1});
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fib.term_fast(n));
}
BENCHMARK(BM_TermFast1D)->RangeMultiplier(100)->Range(100, 1000000000);

MultiSequence grid(const Ring& r) {
  return MultiSequence::of(
      FibSpec(std::vector<RecurrenceType>{RecurrenceType::of(r, {1, 1}), RecurrenceType::of(r, {1, 3})}),
      {1, 1, 0, 1});
}

void BM_MultiTerm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    const auto x = grid(RingDescriptor::integer());
    benchmark::DoNotOptimize(x.term({n, n}));
  }
}
BENCHMARK(BM_MultiTerm)->Range(8, 512);

void BM_MultiTermFast(benchmark::State& state) {
  const auto x = grid(RingDescriptor::integer());
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(x.term_fast({n, n}));
}
BENCHMARK(BM_MultiTermFast)->Range(8, 512);

void BM_ExpandGf(benchmark::State& state) {
  const auto x = grid(RingDescriptor::integer());
  const auto g = gf(x);
  const auto order = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand(g, {order, order}));
}
BENCHMARK(BM_ExpandGf)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
