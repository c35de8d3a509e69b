#include <algorithm>

#include <gtest/gtest.h>

#include "primezero/errors.hpp"
#include "primezero/hardness.hpp"
#include "support.hpp"

using namespace primezero;
using testing_support::Gen;

namespace {

std::optional<std::vector<unsigned>> bitmask_subset_sum(const SubsetSumInstance& inst)
{
    std::optional<std::vector<unsigned>> best;
    const unsigned m = static_cast<unsigned>(inst.a.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        mpz_class s = 0;
        std::vector<unsigned> set;
        for (unsigned k = 0; k < m; ++k)
            if (mask >> k & 1) {
                s += inst.a[k];
                set.push_back(k + 1);
            }
        if (s == inst.b && (!best || set < *best)) best = set;
    }
    return best;
}

SubsetSumInstance random_instance(Gen& gen, unsigned max_m, long bound)
{
    SubsetSumInstance inst;
    const long m = gen.uniform(1, max_m);
    for (long k = 0; k < m; ++k) inst.a.emplace_back(gen.uniform(-bound, bound));
    // half the time pick b as a real subset sum so solvable instances occur
    if (gen.coin()) {
        inst.b = 0;
        for (const auto& x : inst.a)
            if (gen.coin()) inst.b += x;
    } else {
        inst.b = gen.uniform(-2 * bound, 2 * bound);
    }
    return inst;
}

std::vector<unsigned> sequence_primes(unsigned long bound)
{
    std::vector<unsigned> out;
    for (auto p : primes_up_to(static_cast<std::uint32_t>(bound))) out.push_back(p);
    return out;
}

} // namespace

TEST(Selector, SpecExamples)
{
    EXPECT_EQ(selector_modulus(1, SelectorVariant::zero_phase), 2u);
    EXPECT_EQ(selector_modulus(1, SelectorVariant::one_phase), 3u);
    EXPECT_EQ(selector_moduli(4, SelectorVariant::one_phase), (std::vector<unsigned long>{3, 5, 7, 11}));
    const auto s1 = recurrence_terms(selector_sequence(1, SelectorVariant::zero_phase), 3);
    EXPECT_EQ(s1, (std::vector<Rational>{1, 0, 1}));
    const auto o1 = recurrence_terms(selector_sequence(1, SelectorVariant::one_phase), 5);
    EXPECT_EQ(o1, (std::vector<Rational>{0, 1, 0, 0, 1}));
    EXPECT_EQ(selector_value(2, SelectorVariant::one_phase, 31), 1);
    EXPECT_EQ(eval_recurrence(selector_sequence(2, SelectorVariant::one_phase), 31ul), 1);
    EXPECT_THROW(selector_modulus(0, SelectorVariant::zero_phase), InvalidArgument);
}

TEST(SelectorProperty, Periodic)
{
    for (auto variant : {SelectorVariant::zero_phase, SelectorVariant::one_phase})
        for (unsigned k = 1; k <= 4; ++k) {
            const unsigned long p = selector_modulus(k, variant);
            const auto terms = recurrence_terms(selector_sequence(k, variant), 10001);
            for (unsigned long n = 0; n <= 10000; ++n) {
                ASSERT_EQ(selector_value(k, variant, n), selector_value(k, variant, n % p));
                ASSERT_EQ(terms[n], selector_value(k, variant, n));
            }
        }
}

TEST(Reduction, SpecExamples)
{
    const SubsetSumInstance h{{3, 5}, 8};
    EXPECT_EQ(reduction_term(h, SelectorVariant::one_phase, 1), 0);
    EXPECT_EQ(reduction_term(h, SelectorVariant::one_phase, 31), 0);
    const auto spec = reduce_to_lrs(h, SelectorVariant::one_phase);
    EXPECT_EQ(eval_recurrence(spec, 31ul), 0);
    EXPECT_EQ(first_prime_zero(spec, 50), 31ul);

    const SubsetSumInstance single{{1}, 0};
    EXPECT_EQ(reduction_term(single, SelectorVariant::zero_phase, 1), 0);
    EXPECT_EQ(reduction_term(single, SelectorVariant::zero_phase, 2), -1);

    const SubsetSumInstance none{{3, 5}, 4};
    EXPECT_FALSE(first_prime_zero(reduce_to_lrs(none, SelectorVariant::one_phase), 10000).has_value());
}

TEST(Reduction, CharpolyShape)
{
    for (auto variant : {SelectorVariant::zero_phase, SelectorVariant::one_phase})
        for (unsigned m = 1; m <= 4; ++m) {
            const IntPolynomial chi = reduction_charpoly(m, variant);
            unsigned expected = 2;
            IntPolynomial full{-1, 1};
            for (auto p : selector_moduli(m, variant)) {
                expected += static_cast<unsigned>(p - 1);
                full = full * (IntPolynomial::monomial(1, static_cast<unsigned>(p)) - IntPolynomial{1});
            }
            EXPECT_EQ(chi.degree(), static_cast<int>(expected));
            EXPECT_TRUE(divide_by_monic(full, chi).remainder.is_zero());
        }
}

TEST(ReductionProperty, LrsMatchesDefinition)
{
    Gen gen(51);
    for (int t = 0; t < 20; ++t) {
        const auto inst = random_instance(gen, 4, 15);
        for (auto variant : {SelectorVariant::zero_phase, SelectorVariant::one_phase}) {
            const RecurrenceSpec spec = reduce_to_lrs(inst, variant);
            const auto terms = recurrence_terms(spec, 1001);
            for (unsigned long n = 0; n <= 1000; ++n) ASSERT_EQ(terms[n], Rational(reduction_term(inst, variant, n)));
        }
    }
}

TEST(SubsetSum, SpecExamples)
{
    EXPECT_EQ(subset_sum_bruteforce({{3, 5}, 8}), (std::vector<unsigned>{1, 2}));
    EXPECT_FALSE(subset_sum_bruteforce({{3, 5}, 4}).has_value());
    EXPECT_EQ(subset_sum_bruteforce({{1, 2, 3}, 3}), (std::vector<unsigned>{1, 2}));
    EXPECT_EQ(subset_sum_bruteforce({{4, -4}, 0}), std::vector<unsigned>{});
    SubsetSumInstance big;
    big.a.assign(31, 1);
    big.b = 0;
    EXPECT_THROW(subset_sum_bruteforce(big), ResourceExhausted);
    EXPECT_THROW((SubsetSumInstance{{}, 0}).validate(), InvalidArgument);
}

TEST(SubsetSum, MatchesBitmaskOracle)
{
    Gen gen(52);
    for (int t = 0; t < 300; ++t) {
        const auto inst = random_instance(gen, 8, 20);
        EXPECT_EQ(subset_sum_bruteforce(inst), bitmask_subset_sum(inst));
    }
}

TEST(PrimeInProgression, SpecExamples)
{
    EXPECT_EQ(prime_in_progression({{1, 3}, {1, 5}}), 31);
    EXPECT_EQ(prime_in_progression({{1, 2}}), 3);
    EXPECT_EQ(prime_in_progression({{2, 3}, {1, 5}}), 11);
    EXPECT_THROW(prime_in_progression({{1, 3}, {1, 6}}), InvalidArgument);
    EXPECT_THROW(prime_in_progression({{0, 3}}), InvalidArgument);
    EXPECT_THROW(prime_in_progression({}), InvalidArgument);
}

TEST(PrimeInProgression, MatchesDirectScan)
{
    Gen gen(53);
    const std::vector<long> moduli{3, 5, 7, 11, 13};
    for (int t = 0; t < 100; ++t) {
        std::vector<Congruence> sys;
        const long m = gen.uniform(1, 4);
        for (long k = 0; k < m; ++k) sys.push_back({gen.uniform(1, moduli[k] - 1), moduli[k]});
        mpz_class n = 2;
        for (;; ++n) {
            bool ok = is_prime(n);
            for (const auto& c : sys) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), c.modulus.get_mpz_t());
                ok = ok && r == c.r;
            }
            if (ok) break;
        }
        EXPECT_EQ(prime_in_progression(sys), n);
    }
}

TEST(PrimeResidueSystem, Shape)
{
    const auto sys = prime_residue_system({1, 3}, 3);
    ASSERT_EQ(sys.size(), 3u);
    EXPECT_EQ(sys[0].r, 1);
    EXPECT_EQ(sys[0].modulus, 3);
    EXPECT_EQ(sys[1].r, 2);
    EXPECT_EQ(sys[1].modulus, 5);
    EXPECT_EQ(sys[2].r, 1);
    EXPECT_EQ(sys[2].modulus, 7);
    EXPECT_EQ(zero_phase_index({1, 3}), 10);
    EXPECT_EQ(zero_phase_index({}), 1);
}

TEST(ReductionProperty, ZeroPhaseCorrectness)
{
    Gen gen(54);
    for (int t = 0; t < 100; ++t) {
        const auto inst = random_instance(gen, 5, 15);
        const unsigned m = static_cast<unsigned>(inst.a.size());
        const auto S = subset_sum_bruteforce(inst);
        unsigned long P = 1;
        for (auto p : selector_moduli(m, SelectorVariant::zero_phase)) P *= p;
        bool any_zero = false;
        for (unsigned long n = 0; n < P && !any_zero; ++n)
            any_zero = reduction_term(inst, SelectorVariant::zero_phase, n) == 0;
        EXPECT_EQ(S.has_value(), any_zero);
        if (S) {
            EXPECT_EQ(reduction_term(inst, SelectorVariant::zero_phase, zero_phase_index(*S)), 0);
        }
    }
}

TEST(ReductionProperty, OnePhasePrimeCorrectness)
{
    Gen gen(55);
    for (int t = 0; t < 50; ++t) {
        const auto inst = random_instance(gen, 4, 20);
        const unsigned m = static_cast<unsigned>(inst.a.size());
        const RecurrenceSpec spec = reduce_to_lrs(inst, SelectorVariant::one_phase);
        const auto S = subset_sum_bruteforce(inst);
        if (S) {
            const mpz_class witness = prime_in_progression(prime_residue_system(*S, m));
            EXPECT_EQ(reduction_term(inst, SelectorVariant::one_phase, witness), 0);
            const auto found = first_prime_zero(spec, witness.get_ui());
            ASSERT_TRUE(found.has_value());
            EXPECT_LE(*found, witness.get_ui());
        } else {
            EXPECT_FALSE(first_prime_zero(spec, 10000).has_value());
        }
    }
}

TEST(ReductionProperty, SingleElementInstanceHitsEveryPrimeOneModThree)
{
    const SubsetSumInstance inst{{1}, 1};
    for (auto p : sequence_primes(1000))
        EXPECT_EQ(reduction_term(inst, SelectorVariant::one_phase, p) == 0, p % 3 == 1) << p;
}

TEST(Reduction, ExponentialFormInCyclotomicField)
{
    for (auto variant : {SelectorVariant::zero_phase, SelectorVariant::one_phase}) {
        const SubsetSumInstance inst{{3, -5}, 2};
        const RecurrenceSpec spec = reduce_to_lrs(inst, variant);
        const NumberField K = reduction_field(2, variant);
        const auto seq = to_exp_poly(spec, K, reduction_roots(spec, 2, variant));
        for (unsigned long n = 0; n <= 60; ++n)
            EXPECT_EQ(eval_exp_poly(seq, n), K.from_rational(Rational(reduction_term(inst, variant, n)))) << n;
    }
}
