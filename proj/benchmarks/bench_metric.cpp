#include <benchmark/benchmark.h>

#include <vector>

#include "opmetric/convexity.hpp"
#include "opmetric/dynamics.hpp"
#include "opmetric/operator_space.hpp"
#include "opmetric/oracles.hpp"

using namespace opmetric;

namespace {

ClosedOperator make_operator(std::uint64_t seed, Index dim_h, Index dim_k) {
    SeededRng rng(seed);
    return random_operator(rng, dim_h, dim_k, 0.85);
}

void BM_Distance(benchmark::State& state) {
    const Index dim_h = state.range(0);
    const Index dim_k = state.range(1);
    const ClosedOperator t = make_operator(1, dim_h, dim_k);
    const ClosedOperator s = make_operator(2, dim_h, dim_k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(t, s));
    }
}
BENCHMARK(BM_Distance)->Args({4, 2})->Args({8, 3});

void BM_Kobayashi(benchmark::State& state) {
    SeededRng rng(3);
    const BallPoint x = random_ball_point(rng, 4, 2, 0.85);
    const BallPoint y = random_ball_point(rng, 4, 2, 0.85);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kobayashi(x, y));
    }
}
BENCHMARK(BM_Kobayashi);

void BM_Midpoint(benchmark::State& state) {
    const ClosedOperator t = make_operator(4, 4, 2);
    const ClosedOperator s = make_operator(5, 4, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(midpoint(t, s));
    }
}
BENCHMARK(BM_Midpoint);

void BM_Barycenter8(benchmark::State& state) {
    std::vector<ClosedOperator> pts;
    for (std::uint64_t i = 0; i < 8; ++i) {
        pts.push_back(make_operator(10 + i, 3, 2));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(barycenter(pts));
    }
}
BENCHMARK(BM_Barycenter8);

void BM_ChebyshevCenter(benchmark::State& state) {
    std::vector<ClosedOperator> pts;
    for (std::uint64_t i = 0; i < 4; ++i) {
        pts.push_back(make_operator(20 + i, 3, 2));
    }
    const FiniteConfiguration config(pts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chebyshev_center(config));
    }
}
BENCHMARK(BM_ChebyshevCenter);

void BM_OrbitDepth4(benchmark::State& state) {
    SeededRng rng(30);
    const BallAutomorphism g = random_automorphism(rng, 2, 2);
    const IsometryGroup group({HBiholomorphicMap(g)});
    const ClosedOperator start = make_operator(31, 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit(group, start, 4));
    }
}
BENCHMARK(BM_OrbitDepth4);

} // namespace

BENCHMARK_MAIN();
