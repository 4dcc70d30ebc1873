#include "tiltwall/bounds.hpp"
#include "tiltwall/profile.hpp"
#include "tiltwall/rangeb.hpp"
#include "tiltwall/sturm.hpp"
#include "tiltwall/surd.hpp"
#include "tiltwall/wallsearch.hpp"

#include <benchmark/benchmark.h>

using namespace tiltwall;

static void BM_SurdCompare(benchmark::State& state) {
    // Two close wall endpoints: -57/14 - sqrt(505)/14 against -9/2 - 5/2.
    Surd a(Rat(-57, 14), Rat(-1, 14), Rat(505));
    Surd b(Rat(-9, 2), Rat(-1), Rat(25, 4));
    for (auto _ : state) benchmark::DoNotOptimize(surd_cmp(a, b));
}
BENCHMARK(BM_SurdCompare);

static void BM_SturmQuartic(benchmark::State& state) {
    Poly p({Rat(-1), Rat(-8), Rat(20), Rat(-24), Rat(12)});
    for (auto _ : state) benchmark::DoNotOptimize(sturm_sign(p, Interval::at_least(Rat(2))));
}
BENCHMARK(BM_SturmQuartic);

static void BM_BoundE(benchmark::State& state) {
    const long k = state.range(0);
    long d = 4 * k * k;
    for (auto _ : state) benchmark::DoNotOptimize(bound_E(Rat(d), k));
}
BENCHMARK(BM_BoundE)->Arg(2)->Arg(10)->Arg(50);

static void BM_Enumerate(benchmark::State& state) {
    const Profile P = profile_by_name("P3");
    ChernVec v{Rat(2), Rat(-1), Rat(-9, 2), Rat(7, 6)};
    EngineOptions opt{static_cast<unsigned>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(search_walls(v, P, {}, opt));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(4)->UseRealTime();

static void BM_RefuteIdeal(benchmark::State& state) {
    const Profile P = profile_by_name("P3");
    const long d = state.range(0), k = state.range(1);
    SearchConstraints C;
    C.section_vanishing_k = k;
    ChernVec v{Rat(1), Rat(0), Rat(-d), bound_E(Rat(d), k) + Rat(1, 6)};
    for (auto _ : state) benchmark::DoNotOptimize(refute_ch3(v, P, C));
}
BENCHMARK(BM_RefuteIdeal)->Args({7, 2})->Args({30, 4});

static void BM_SpecialCase(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(special_case_2k11(state.range(0)));
}
BENCHMARK(BM_SpecialCase)->Arg(31)->Arg(100);

BENCHMARK_MAIN();
