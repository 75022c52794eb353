#include "lspace/cabling.hpp"
#include "lspace/graph.hpp"
#include "lspace/seifert.hpp"

#include "support.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

using namespace lspace;
using testsupport::Rng;

namespace {

std::vector<Rational> random_slopes(Rng& rng, int count, int max_den) {
    std::vector<Rational> ys;
    for (int i = 0; i < count; ++i) ys.push_back(testsupport::rand_finite(rng, 9, max_den));
    ys[0] = testsupport::rand_noninteger(rng, 9, max_den);
    ys[1] = testsupport::rand_noninteger(rng, 9, max_den);
    return ys;
}

void BM_EndpointSearch(benchmark::State& state) {
    Rng rng(42);
    std::vector<std::vector<Rational>> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_slopes(rng, 4, int(state.range(0))));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(jn_endpoints(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_EndpointSearch)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_ClassifyRandomTree(benchmark::State& state) {
    Rng rng(43);
    std::vector<TreeManifold> trees;
    for (int i = 0; i < 64; ++i)
        trees.push_back(testsupport::rand_tree(rng, int(state.range(0))));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(trees[i++ % trees.size()]));
    }
}
BENCHMARK(BM_ClassifyRandomTree)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

void BM_CableInterval(benchmark::State& state) {
    Rng rng(44);
    const long long p = state.range(0);
    std::vector<std::pair<Rational, Rational>> inputs;
    while (inputs.size() < 64) {
        Rational a = testsupport::rand_slope(rng, 10);
        Rational b = testsupport::rand_slope(rng, 10);
        inputs.emplace_back(std::move(a), std::move(b));
    }
    long long q = p + 1;  // coprime
    size_t i = 0;
    for (auto _ : state) {
        const auto& in = inputs[i++ % inputs.size()];
        benchmark::DoNotOptimize(cable_interval(in.first, in.second, p, q));
    }
}
BENCHMARK(BM_CableInterval)->Arg(2)->Arg(5)->Arg(11);

void BM_IteratedCableGst(benchmark::State& state) {
    for (auto _ : state) {
        TreeManifold current;
        for (long long p = 2; p <= 2 + state.range(0); ++p)
            current = cable_construct_tree(current, p, 2 * p - 1);
        benchmark::DoNotOptimize(is_generalized_solid_torus(current));
    }
}
BENCHMARK(BM_IteratedCableGst)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
