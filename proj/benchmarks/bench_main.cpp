#include <benchmark/benchmark.h>

#include "wittflag/char_ring.hpp"
#include "wittflag/rep_types.hpp"

using namespace wittflag;

static void BM_WeylOrbitE7(benchmark::State& state) {
  const RootDatum& rd = RootDatum::get({Family::E, 7});
  for (auto _ : state) {
    auto orb = weyl_orbit(rd, rd.fundamental_weight(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(orb.size());
  }
}
BENCHMARK(BM_WeylOrbitE7)->Arg(7)->Arg(1)->Arg(4);

static void BM_HilbertBasisF4(benchmark::State& state) {
  const RootDatum& rd = RootDatum::get({Family::F, 4});
  SubsetMask h = SubsetMask::of({2, 3, 4});
  for (auto _ : state) {
    FixedConeMonoid m = hilbert_basis(rd, h);
    benchmark::DoNotOptimize(m.hilbert_basis.size());
  }
}
BENCHMARK(BM_HilbertBasisF4);

static void BM_ConjugacyOrbitE6(benchmark::State& state) {
  const RootDatum& rd = RootDatum::get({Family::E, 6});
  IntMat seed = longest_element(rd, SubsetMask::of({1, 3, 4, 5, 6})).m;
  for (auto _ : state) {
    ConjugacyOrbit orbit(rd, seed, 2'000'000);
    benchmark::DoNotOptimize(orbit.size());
  }
}
BENCHMARK(BM_ConjugacyOrbitE6);

static void BM_SubsetClassesE8(benchmark::State& state) {
  const RootDatum& rd = RootDatum::get({Family::E, 8});
  for (auto _ : state) {
    // the class computation itself is memoized; exercise the raw moves by
    // touching every mask through the equivalence predicate
    int count = 0;
    for (unsigned b = 0; b < 256; ++b)
      count += subsets_equivalent(rd, SubsetMask(b), SubsetMask(b));
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SubsetClassesE8);

static void BM_CharProductE6(benchmark::State& state) {
  const RootDatum& rd = RootDatum::get({Family::E, 6});
  SubsetMask all = SubsetMask::full(6);
  CharacterElement a = symmetric_sum(rd, all, rd.fundamental_weight(3));
  CharacterElement b = symmetric_sum(rd, all, rd.fundamental_weight(5));
  for (auto _ : state) {
    auto dec = decompose_into_symmetric_sums(rd, all, product(a, b));
    benchmark::DoNotOptimize(dec.size());
  }
}
BENCHMARK(BM_CharProductE6);

static void BM_ClassifyE8Row(benchmark::State& state) {
  const RootDatum& rd = RootDatum::get({Family::E, 8});
  SubsetMask h = SubsetMask::of({1, 3, 4, 5});
  for (auto _ : state) {
    ConditionVerdict v = classify_condition(rd, h);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_ClassifyE8Row);

BENCHMARK_MAIN();
