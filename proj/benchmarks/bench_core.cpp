// Microbenchmarks for the hot algebra paths. Fixed seeds keep the inputs
// stable across runs.
#include <benchmark/benchmark.h>

#include "abcpoly/bounds.hpp"
#include "abcpoly/parser.hpp"
#include "abcpoly/search.hpp"
#include "support_bench.hpp"

using namespace abcpoly;

namespace {

Context ctx1() { return make_context(1, {"x"}); }

static void BM_PolyMul(benchmark::State& state) {
    Prng rng(42);
    Context c = ctx1();
    Polynomial a = bench::random_univariate(rng, c, state.range(0));
    Polynomial b = bench::random_univariate(rng, c, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

static void BM_GcdWithCommonFactor(benchmark::State& state) {
    Prng rng(43);
    Context c = ctx1();
    Polynomial w = bench::random_univariate(rng, c, state.range(0));
    Polynomial a = bench::random_univariate(rng, c, state.range(0)) * w;
    Polynomial b = bench::random_univariate(rng, c, state.range(0)) * w;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd(a, b));
    }
}
BENCHMARK(BM_GcdWithCommonFactor)->Arg(4)->Arg(8)->Arg(16);

static void BM_Radical(benchmark::State& state) {
    Prng rng(44);
    Context c = ctx1();
    Polynomial f = bench::random_univariate(rng, c, 4);
    Polynomial g = bench::random_univariate(rng, c, 4);
    Polynomial h = f.pow(static_cast<unsigned>(state.range(0))) * g;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radical(h));
    }
}
BENCHMARK(BM_Radical)->Arg(2)->Arg(4)->Arg(8);

static void BM_ClassicalWronskian(benchmark::State& state) {
    Prng rng(45);
    Context c = ctx1();
    std::vector<Polynomial> fs;
    for (long i = 0; i < state.range(0); ++i) {
        fs.push_back(bench::random_univariate(rng, c, 6));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_wronskian(fs, 0));
    }
}
BENCHMARK(BM_ClassicalWronskian)->Arg(3)->Arg(4)->Arg(5);

static void BM_RhoSigmaPipeline(benchmark::State& state) {
    Prng rng(46);
    Context c = ctx1();
    VanishingSum sum = bench::random_admissible(rng, c,
                                                static_cast<size_t>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_rho_sigma(sum));
    }
}
BENCHMARK(BM_RhoSigmaPipeline)->Arg(3)->Arg(4)->Arg(5);

static void BM_BruteForceTiny(benchmark::State& state) {
    SearchSpace space;
    space.terms = 3;
    space.degree_cap = 1;
    for (long v = -1; v <= 1; ++v) space.coefficients.push_back(Rational(v));
    space.field = CycField::get(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_bounds(space, false));
    }
}
BENCHMARK(BM_BruteForceTiny);

}  // namespace

BENCHMARK_MAIN();
