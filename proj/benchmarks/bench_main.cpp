#include <benchmark/benchmark.h>

#include "endochain/axioms.hpp"
#include "endochain/semilattice.hpp"
#include "endochain/verifier.hpp"

using namespace endochain;

namespace {

void BM_enumerate_endomorphisms(benchmark::State& state) {
  const chain c(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto all = all_endomorphisms(c);
    benchmark::DoNotOptimize(all.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(count_endomorphisms(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_enumerate_endomorphisms)->Arg(8)->Arg(10)->Arg(12);

void BM_axiom_check_full_carrier(benchmark::State& state) {
  const carrier full = carrier::full(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto report = check_semiring_axioms(full);
    benchmark::DoNotOptimize(&report);
  }
  const int64_t size = full.size();
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * size * size * size);
}
BENCHMARK(BM_axiom_check_full_carrier)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_full_string_product_table(benchmark::State& state) {
  const string_type_m full = string_type_m::full(chain(static_cast<int>(state.range(0))));
  const carrier& elems = full.elements();
  for (auto _ : state) {
    int checksum = 0;
    for (int i = 0; i < elems.size(); ++i)
      for (int j = 0; j < elems.size(); ++j)
        checksum += *elems.index_of(compose(elems[i], elems[j]));
    benchmark::DoNotOptimize(checksum);
  }
  const int64_t size = elems.size();
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * size * size);
}
BENCHMARK(BM_full_string_product_table)->Arg(8)->Arg(12);

void BM_derivation_family_analysis(benchmark::State& state) {
  const string_type2 str(chain(static_cast<int>(state.range(0))), 1,
                         static_cast<int>(state.range(0)) - 2);
  for (auto _ : state) {
    auto report = analyze_string_derivations(str);
    benchmark::DoNotOptimize(&report);
  }
}
BENCHMARK(BM_derivation_family_analysis)->Arg(8)->Arg(10)->Arg(12);

void BM_claim_suite(benchmark::State& state) {
  for (auto _ : state) {
    auto results = run_suite(2, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(results.data());
  }
}
BENCHMARK(BM_claim_suite)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
