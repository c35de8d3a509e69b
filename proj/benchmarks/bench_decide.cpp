#include <benchmark/benchmark.h>

#include "primezero/skolem.hpp"

using namespace primezero;

namespace {

ExpPolySequence example_one()
{
    const NumberField K(IntPolynomial{1, 0, 1}, true);
    std::vector<ExpTerm> t{{K.element({39, 52}), {K.one()}},
                           {K.element({39, -52}), {K.one()}},
                           {K.element({-60, 25}), {K.from_rational(3)}},
                           {K.element({-60, -25}), {K.from_rational(3)}},
                           {K.one(), {K.one()}}};
    return make_sequence(K, std::move(t));
}

void BM_ExactTerm281(benchmark::State& state)
{
    const auto seq = example_one();
    for (auto _ : state) benchmark::DoNotOptimize(eval_exp_poly(seq, 281ul));
}
BENCHMARK(BM_ExactTerm281);

void BM_DecideExampleOne(benchmark::State& state)
{
    const auto seq = example_one();
    for (auto _ : state) benchmark::DoNotOptimize(decide(seq, FamilySpec::prime_power(1, 1)));
}
BENCHMARK(BM_DecideExampleOne)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
