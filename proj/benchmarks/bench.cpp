#include <benchmark/benchmark.h>

#include <horocohom/bwb.hpp>
#include <horocohom/cech.hpp>
#include <horocohom/demazure.hpp>
#include <horocohom/fan.hpp>
#include <horocohom/root_system.hpp>

#include <cstdint>

namespace {

horo::Fan plane() {
    return {2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}};
}

horo::Fan ruled(std::int64_t a) {
    return {2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
}

horo::Fan space() {
    return {3,
            {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
            {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

void bm_build_root_datum(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(horo::build_root_datum("E8"));
}
BENCHMARK(bm_build_root_datum);

void bm_coset_reps_b3(benchmark::State& state) {
    auto datum = horo::build_root_datum("B3");
    for (auto _ : state)
        benchmark::DoNotOptimize(
            horo::minimal_coset_reps(datum, horo::ParabolicSpec{{}}));
}
BENCHMARK(bm_coset_reps_b3);

void bm_bwb_deep_twist(benchmark::State& state) {
    horo::FlagBundle bundle{horo::build_root_datum("F4"), horo::ParabolicSpec{{}},
                            {{1, -9}, {2, 7}, {3, -11}, {4, 5}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(horo::bwb_solve(bundle));
}
BENCHMARK(bm_bwb_deep_twist);

void bm_chamber_table(benchmark::State& state) {
    auto fan = horo::CompleteFan::checked(ruled(state.range(0)));
    horo::ToricDivisor div{{-3, 5, -2, 4}};
    for (auto _ : state)
        benchmark::DoNotOptimize(horo::toric_cohomology(fan, div));
}
BENCHMARK(bm_chamber_table)->Arg(1)->Arg(2)->Arg(7);

void bm_chamber_table_3d(benchmark::State& state) {
    auto fan = horo::CompleteFan::checked(space());
    horo::ToricDivisor div{{-4, 3, -2, 5}};
    for (auto _ : state)
        benchmark::DoNotOptimize(horo::toric_cohomology(fan, div));
}
BENCHMARK(bm_chamber_table_3d);

void bm_chart_cover_box(benchmark::State& state) {
    auto fan = horo::CompleteFan::checked(plane());
    horo::ToricDivisor div{{-3, 1, -2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(horo::oracle_total(fan, div, state.range(0)));
}
BENCHMARK(bm_chart_cover_box)->Arg(5)->Arg(10)->Arg(20);

void bm_single_character(benchmark::State& state) {
    auto fan = horo::CompleteFan::checked(space());
    horo::ToricDivisor div{{-4, 3, -2, 5}};
    std::vector<std::int64_t> m{1, -2, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(horo::cech_cohomology(fan, div, m));
}
BENCHMARK(bm_single_character);

} // namespace

BENCHMARK_MAIN();
