#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "hacoh/five_term.hpp"
#include "hacoh/linalg.hpp"
#include "hacoh/sweedler.hpp"

using namespace hacoh;
using namespace fixtures;

namespace {

void BM_Rank(benchmark::State& state) {
    const auto f = fp(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    FieldMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = static_cast<Scalar>(rng() % 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(*f, a));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_Differential(benchmark::State& state) {
    const auto f = fp(3);
    const auto s3 = group_algebra(f, FiniteGroup::symmetric(3));
    const auto cx = CochainComplex::sweedler(s3, AlgebraData::ground(f));
    const auto q = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    const auto c = cx->grid(q).random(rng);
    for (auto _ : state) benchmark::DoNotOptimize(cx->differential(c));
}
BENCHMARK(BM_Differential)->DenseRange(1, 2);

void BM_H2Bruteforce(benchmark::State& state) {
    const auto f = fp(3);
    const auto k = group_algebra(f, FiniteGroup::cyclic(2));
    const auto h = tensor_hopf(*k, *k);
    for (auto _ : state) benchmark::DoNotOptimize(h2_bruteforce(h, AlgebraData::ground(f)));
}
BENCHMARK(BM_H2Bruteforce)->Unit(benchmark::kMillisecond);

void BM_VerifySequence(benchmark::State& state) {
    const SequenceSetup s(smash(c2_on_c3(f4())), AlgebraData::ground(f4()));
    for (auto _ : state) benchmark::DoNotOptimize(verify_sequence(s));
}
BENCHMARK(BM_VerifySequence)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
