#include <benchmark/benchmark.h>

#include <vector>

#include "qgraph/polynomial.hpp"
#include "qgraph/rational_function.hpp"

using namespace qgraph;

namespace {

// Dense polynomial with pseudo-random small-integer coefficients; mirrors the
// coefficient growth pattern the elimination produces.
Polynomial dense(int degree, unsigned salt) {
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    unsigned s = salt * 2654435761u + 1u;
    for (auto& x : c) {
        s = s * 1664525u + 1013904223u;
        x = Rational(static_cast<long>(s % 19) - 9);
    }
    if (c.back() == Rational(0)) c.back() = Rational(1);
    return Polynomial(std::move(c));
}

void BM_PolyMultiply(benchmark::State& state) {
    const Polynomial a = dense(static_cast<int>(state.range(0)), 1);
    const Polynomial b = dense(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_PolyGcdReduce(benchmark::State& state) {
    const Polynomial common = dense(static_cast<int>(state.range(0)), 3);
    const Polynomial num = dense(8, 4) * common;
    const Polynomial den = dense(8, 5) * common;
    for (auto _ : state) benchmark::DoNotOptimize(RationalFunction(num, den));
}

void BM_RationalFunctionArithmetic(benchmark::State& state) {
    const RationalFunction f(dense(12, 6), dense(10, 7));
    const RationalFunction g(dense(11, 8), dense(13, 9));
    for (auto _ : state) benchmark::DoNotOptimize(f * g + f / g);
}

}  // namespace

BENCHMARK(BM_PolyMultiply)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_PolyGcdReduce)->Arg(8)->Arg(24);
BENCHMARK(BM_RationalFunctionArithmetic);

BENCHMARK_MAIN();
