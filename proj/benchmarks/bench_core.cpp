#include <benchmark/benchmark.h>

#include "ncb/cayley.hpp"
#include "ncb/embed.hpp"
#include "ncb/formal_space.hpp"
#include "ncb/freeprob.hpp"
#include "ncb/partition.hpp"
#include "ncb/series.hpp"

namespace {

void BM_EnumerateNca(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    ncb::for_each_nca(n, [&](const ncb::NCPartitionA&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateNca)->Arg(6)->Arg(8)->Arg(10);

void BM_EnumerateNcb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    ncb::for_each_ncb(n, [&](const ncb::NCPartitionB&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateNcb)->Arg(4)->Arg(6)->Arg(8);

void BM_Kreweras(benchmark::State& state) {
  const auto all = ncb::enumerate_ncb(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncb::kreweras(all[i++ % all.size()]));
  }
}
BENCHMARK(BM_Kreweras)->Arg(4)->Arg(6);

void BM_IntervalOmega(benchmark::State& state) {
  const auto omega = ncb::omega_b(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncb::interval(omega));
  }
}
BENCHMARK(BM_IntervalOmega)->Arg(3)->Arg(4);

void BM_BoxconvB(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  ncb::Rng rng(1);
  ncb::SeriesB f(order), g(order);
  for (int k = 1; k <= order; ++k) {
    f.set_coeff(k, ncb::DualScalar(rng.rational(), rng.rational()));
    g.set_coeff(k, ncb::DualScalar(rng.rational(), rng.rational()));
  }
  ncb::boxconv_b(f, g);  // warm the shape cache outside the loop
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncb::boxconv_b(f, g));
  }
}
BENCHMARK(BM_BoxconvB)->Arg(5)->Arg(7);

void BM_RTransform(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  ncb::Rng rng(1);
  ncb::SeriesB presc(order);
  for (int k = 1; k <= order; ++k) {
    presc.set_coeff(k, ncb::DualScalar(rng.rational(), rng.rational()));
  }
  const auto space = ncb::FormalSpaceB::from_cumulants({presc});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncb::r_transform_b(space, space.pair(0), order));
  }
}
BENCHMARK(BM_RTransform)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
