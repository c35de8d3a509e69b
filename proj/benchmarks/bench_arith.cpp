#include <benchmark/benchmark.h>

#include "primezero/number_field.hpp"
#include "primezero/primes.hpp"
#include "primezero/resultant.hpp"

using namespace primezero;

namespace {

IntPolynomial dense(int degree, long seed)
{
    std::vector<mpz_class> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back((seed * (i + 3) * 7919) % 97 - 48);
    c.back() = 1;
    return IntPolynomial(c);
}

void BM_Resultant(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const IntPolynomial p = dense(d, 11), q = dense(d, 17);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorSemiprime(benchmark::State& state)
{
    const mpz_class n = mpz_class(1000000007) * mpz_class(998244353);
    for (auto _ : state) benchmark::DoNotOptimize(factor_integer(n));
}
BENCHMARK(BM_FactorSemiprime);

void BM_PowModGaussian(benchmark::State& state)
{
    const NumberField K(IntPolynomial{1, 0, 1}, true);
    const FieldElement a = K.element({39, 52});
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nf_pow_mod(K, a, n, 1000003));
}
BENCHMARK(BM_PowModGaussian)->Arg(6)->Arg(30)->Arg(100);

} // namespace
