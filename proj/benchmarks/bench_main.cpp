#include <algorithm>  // for shuffle, swap
#include <random>     // for mt19937

#include <benchmark/benchmark.h>

#include "semivar/conjugacy.hpp"
#include "semivar/green.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/search.hpp"
#include "semivar/transformation.hpp"

using namespace semivar;

namespace {

  CayleyTable random_relabelling(CayleyTable const& t, unsigned seed) {
    Bijection phi(t.order());
    for (element_type i = 0; i < t.order(); ++i) {
      phi[i] = i;
    }
    std::mt19937 rng(seed);
    std::shuffle(phi.begin(), phi.end(), rng);
    return relabel(t, phi);
  }

}  // namespace

static void BM_CanonicalForm(benchmark::State& state) {
  auto const base = tables::symmetric_group_3();
  auto const t    = random_relabelling(base, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(t));
  }
}
BENCHMARK(BM_CanonicalForm);

static void BM_Enumerate(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(spec));
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Green(benchmark::State& state) {
  auto const t = full_transformation_monoid(static_cast<std::size_t>(state.range(0))).table;
  for (auto _ : state) {
    benchmark::DoNotOptimize(green(t));
  }
  state.counters["order"] = static_cast<double>(t.order());
}
BENCHMARK(BM_Green)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_PrimaryConjugacy(benchmark::State& state) {
  auto const t = full_transformation_monoid(static_cast<std::size_t>(state.range(0))).table;
  for (auto _ : state) {
    benchmark::DoNotOptimize(primary_conjugacy(t));
  }
  state.counters["order"] = static_cast<double>(t.order());
}
BENCHMARK(BM_PrimaryConjugacy)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
