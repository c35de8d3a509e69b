#include <algorithm>

#include <gtest/gtest.h>

#include "primezero/errors.hpp"
#include "primezero/io/report.hpp"
#include "primezero/skolem.hpp"
#include "support.hpp"

using namespace primezero;
using testing_support::Gen;

namespace {

ExpPolySequence over(const NumberField& K, std::vector<std::pair<FieldElement, std::vector<FieldElement>>> terms)
{
    std::vector<ExpTerm> t;
    for (auto& [root, coeffs] : terms) t.push_back({root, coeffs});
    return make_sequence(K, std::move(t));
}

// base^n - c over the given field
ExpPolySequence power_minus_in(const NumberField& K, long base, long c)
{
    return over(K, {{K.from_rational(base), {K.one()}}, {K.one(), {K.from_rational(-c)}}});
}

bool has_obstruction(const DecisionReport& r, const std::string& kind)
{
    return std::any_of(r.obstructions.begin(), r.obstructions.end(), [&](const Obstruction& o) { return o.kind == kind; });
}

bool all_divisible(const FieldElement& a, const mpz_class& p)
{
    if (!a.is_integral()) return false;
    return std::all_of(a.numerators().begin(), a.numerators().end(),
                       [&](const mpz_class& c) { return mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()) != 0; });
}

} // namespace

TEST(FamilySpecTest, Validation)
{
    EXPECT_THROW(FamilySpec::prime_power(1, 2).validate(), InvalidArgument);
    EXPECT_THROW(FamilySpec::sum({}, 2).validate(), InvalidArgument);
    EXPECT_THROW(FamilySpec::sum({{0, 1}}, 2).validate(), InvalidArgument);
    EXPECT_THROW(FamilySpec::sum({{3, 1}}, 2).validate(), InvalidArgument);
    const FamilySpec s = FamilySpec::sum({{1, 1}, {2, 0}, {1, 2}}, 2);
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.pattern_weight(), 4u);
    EXPECT_EQ(s.pattern_fixed_part(), 2u);
}

TEST(WitnessPrimes, DeterministicLargeAndAvoiding)
{
    const auto a = witness_primes(16, 0), b = witness_primes(16, 0), c = witness_primes(16, 1);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    ASSERT_EQ(a.size(), 16u);
    for (const auto& q : a) {
        EXPECT_TRUE(is_prime(q));
        EXPECT_GE(mpz_sizeinbase(q.get_mpz_t(), 2), 62u);
    }
    const auto avoided = witness_primes(4, 0, a[0] * a[2]);
    EXPECT_EQ(std::count(avoided.begin(), avoided.end(), a[0]), 0);
    EXPECT_EQ(std::count(avoided.begin(), avoided.end(), a[2]), 0);
}

TEST(VerifyCandidate, SpecExamples)
{
    const VerifyConfig cfg;
    const auto e = verify_candidate(testing_support::example1(), 281, cfg);
    EXPECT_EQ(e.kind, ZeroKind::nonzero_exact);
    ASSERT_TRUE(e.value.has_value());
    EXPECT_EQ(io::scientific(e.value->coord(0).get_num(), 2), "3.7e509");

    const auto s = testing_support::power_minus(2, 32);
    EXPECT_EQ(verify_candidate(s, 5, cfg).kind, ZeroKind::zero);
    const auto w = verify_candidate(s, mpz_class(1000000000), cfg, {7});
    EXPECT_EQ(w.kind, ZeroKind::nonzero_witness);
    EXPECT_EQ(w.witnesses, (std::vector<WitnessResult>{{7, true}}));
}

TEST(VerifyCandidate, ZeroOnlyFromExactEvaluation)
{
    const NumberField Q = NumberField::rationals();
    const auto seven = over(Q, {{Q.one(), {Q.from_rational(7)}}});
    VerifyConfig cfg;
    // every witness vanishes but the index is below the ceiling: exact decides
    const auto small = verify_candidate(seven, 5000, cfg, {7});
    EXPECT_EQ(small.kind, ZeroKind::nonzero_exact);
    EXPECT_EQ(small.witnesses, (std::vector<WitnessResult>{{7, false}}));
    const auto big = verify_candidate(seven, mpz_class(1) << 30, cfg, {7});
    EXPECT_EQ(big.kind, ZeroKind::unresolved_too_large);
    EXPECT_FALSE(big.value.has_value());
}

TEST(VerifyCandidate, RequiresIntegralSequence)
{
    const NumberField Q = NumberField::rationals();
    const auto half = over(Q, {{Q.from_rational(Rational(1, 2)), {Q.one()}}});
    EXPECT_THROW(verify_candidate(half, 3, VerifyConfig{}), InvalidArgument);
}

TEST(AdmissibleMultipliers, SpecExamples)
{
    const auto ex = admissible_multipliers(testing_support::example1(), 1);
    ASSERT_EQ(ex.multipliers.size(), 1u);
    EXPECT_EQ(ex.multipliers[0].ell, 1u);
    EXPECT_EQ(ex.multipliers[0].value, testing_support::gaussian().from_rational(-281));

    const NumberField Q = NumberField::rationals();
    const auto n2n = admissible_multipliers(over(Q, {{Q.from_rational(2), {Q.zero(), Q.one()}}}), 3);
    EXPECT_TRUE(n2n.short_circuit);
    EXPECT_TRUE(n2n.multipliers.empty());

    const auto m = admissible_multipliers(testing_support::power_minus(2, 2), 2);
    ASSERT_EQ(m.multipliers.size(), 1u);
    EXPECT_EQ(m.multipliers[0].ell, 2u);
    EXPECT_EQ(m.multipliers[0].value, Q.from_rational(2));
}

TEST(CandidatePrimesTest, SpecExamples)
{
    const auto ex = candidate_primes(testing_support::example1(), 1);
    EXPECT_EQ(ex.primes, std::vector<mpz_class>{281});
    EXPECT_EQ(ex.norm, 78961);
    EXPECT_EQ(candidate_primes(testing_support::power_minus(2, 32), 1).primes, (std::vector<mpz_class>{2, 3, 5}));
    const NumberField Q = NumberField::rationals();
    EXPECT_TRUE(candidate_primes(Q, Q.one()).primes.empty());
    EXPECT_THROW(candidate_primes(Q, Q.zero()), InvalidArgument);
}

TEST(CandidatePrimesTest, BudgetOverrunIsRecorded)
{
    const NumberField Q = NumberField::rationals();
    FactorEffort tiny;
    tiny.trial_bound = 100;
    tiny.rho_iterations = 10;
    tiny.rho_attempts = 1;
    const mpz_class n = mpz_class("1000000000039") * mpz_class("1000000000061");
    const auto c = candidate_primes(Q, Q.from_rational(Rational(2 * n)), tiny);
    EXPECT_EQ(c.primes, std::vector<mpz_class>{2});
    EXPECT_EQ(c.unfactored, std::vector<mpz_class>{n});
}

TEST(Decide, ExampleOneNoZero)
{
    const auto r = decide(testing_support::example1(), FamilySpec::prime_power(1, 1));
    EXPECT_EQ(r.outcome, Outcome::no_zero);
    ASSERT_EQ(r.multipliers.size(), 1u);
    EXPECT_EQ(r.multipliers[0].candidates, std::vector<mpz_class>{281});
    EXPECT_EQ(r.multipliers[0].norm, 78961);
    ASSERT_EQ(r.evidence.size(), 1u);
    EXPECT_EQ(r.evidence[0].n, 281);
    EXPECT_EQ(r.evidence[0].kind, ZeroKind::nonzero_exact);
}

TEST(Decide, PowerMinus32FindsFive)
{
    const auto r = decide(testing_support::power_minus(2, 32), FamilySpec::prime_power(1));
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    ASSERT_TRUE(r.zero.has_value());
    EXPECT_EQ(r.zero->n, 5);
    EXPECT_EQ(r.zero->p, mpz_class(5));
    EXPECT_EQ(r.zero->k, 1u);
    EXPECT_EQ(r.multipliers[0].candidates, (std::vector<mpz_class>{2, 3, 5}));
}

TEST(Decide, BaseIndexZero)
{
    const auto r = decide(testing_support::power_minus(2, 2), FamilySpec::prime_power(1));
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    EXPECT_EQ(r.zero->n, 1);
    EXPECT_EQ(r.zero->k, 0u);
    EXPECT_FALSE(r.zero->p.has_value());
}

TEST(Decide, VanishingFirstTermIsAnObstruction)
{
    const auto r = decide(testing_support::power_minus(2, 2), FamilySpec::prime_power(1, 1));
    EXPECT_EQ(r.outcome, Outcome::unresolved);
    EXPECT_TRUE(has_obstruction(r, "vanishing-v1"));
}

TEST(Decide, ShortCircuitAtZero)
{
    const NumberField Q = NumberField::rationals();
    const auto r = decide(over(Q, {{Q.from_rational(2), {Q.zero(), Q.one()}}}), FamilySpec::multiple(2));
    EXPECT_TRUE(r.short_circuit);
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    EXPECT_EQ(r.zero->n, 0);
}

TEST(Decide, MultipleFamily)
{
    const auto r = decide(testing_support::power_minus(2, 32), FamilySpec::multiple(2, 1));
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    EXPECT_EQ(r.zero->n, 5);
    EXPECT_EQ(r.zero->ell, 1u);
    ASSERT_EQ(r.multipliers.size(), 2u);
    EXPECT_EQ(r.multipliers[1].candidates, (std::vector<mpz_class>{2, 7}));
    // 12 = 3 * 2^2 needs l = 3, outside L_2
    EXPECT_EQ(decide(testing_support::power_minus(2, 4096), FamilySpec::multiple(2, 1)).outcome, Outcome::no_zero);
    const auto r3 = decide(testing_support::power_minus(2, 4096), FamilySpec::multiple(3, 1));
    EXPECT_EQ(r3.outcome, Outcome::zero_found);
    EXPECT_EQ(r3.zero->n, 12);
    EXPECT_EQ(r3.zero->ell, 3u);
}

TEST(Decide, RejectsAlgebraicCoefficientsForPrimePower)
{
    const NumberField K = testing_support::gaussian();
    const auto s = over(K, {{K.from_rational(2), {K.element({0, 1})}}});
    EXPECT_THROW(decide(s, FamilySpec::prime_power(1)), InvalidArgument);
    EXPECT_NO_THROW(decide(s, FamilySpec::inertial(1)));
}

TEST(Decide, InertialNeedsGaloisClaimAboveDegreeTwo)
{
    const NumberField K(IntPolynomial{-2, 0, 0, 1}, false);
    EXPECT_THROW(decide(power_minus_in(K, 2, 4), FamilySpec::inertial(1)), InvalidArgument);
}

TEST(Decide, InertialUsesInertialDegree)
{
    // 2^n - 512 over Q(i): 3 is inert (f = 2) so n = 3^2 = 9 is in the family
    const auto s = power_minus_in(testing_support::gaussian(), 2, 512);
    const auto r = decide(s, FamilySpec::inertial(1, 1));
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    EXPECT_EQ(r.zero->n, 9);
    EXPECT_EQ(r.zero->p, mpz_class(3));
    EXPECT_EQ(r.zero->f, 2u);
    EXPECT_EQ(r.ramified_candidates, std::vector<mpz_class>{2});
    ASSERT_EQ(r.ramified.size(), 1u);
    EXPECT_EQ(r.ramified[0].split.e, 2u);
    // p = 2 is enumerated at f' = 1 (member) and f' = 2 (non-member)
    int ramified_branches = 0;
    for (const auto& b : r.branches)
        if (b.source == BranchSource::ramified) {
            ++ramified_branches;
            EXPECT_EQ(b.membership, b.f == 1 ? Membership::member : Membership::non_member);
        }
    EXPECT_EQ(ramified_branches, 2);
    // the prime-power family does not contain 9
    EXPECT_EQ(decide(s, FamilySpec::prime_power(1, 1)).outcome, Outcome::no_zero);
}

TEST(Decide, IndexObstructedZeroIsUncertified)
{
    // Z[sqrt(-3)] has index 2, so p = 2 cannot be certified
    const NumberField K(IntPolynomial{3, 0, 1}, true);
    const auto r = decide(power_minus_in(K, 2, 4), FamilySpec::inertial(1, 1));
    EXPECT_EQ(r.outcome, Outcome::unresolved);
    EXPECT_FALSE(r.zero.has_value());
    EXPECT_TRUE(has_obstruction(r, "uncertified-zero"));
}

TEST(Decide, SumFamily)
{
    // S_p = p + 1, zero of 2^n - 64 at p = 5
    const auto r = decide(testing_support::power_minus(2, 64), FamilySpec::sum({{1, 1}, {1, 0}}, 1));
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    EXPECT_EQ(r.zero->n, 6);
    EXPECT_EQ(r.zero->p, mpz_class(5));
    EXPECT_FALSE(r.zero->k.has_value());
    ASSERT_EQ(r.multipliers.size(), 1u);
    EXPECT_EQ(r.multipliers[0].candidates, (std::vector<mpz_class>{2, 3, 5}));

    const auto fixed = decide(testing_support::power_minus(2, 4), FamilySpec::sum({{2, 0}}, 2));
    EXPECT_EQ(fixed.outcome, Outcome::zero_found);
    EXPECT_EQ(fixed.zero->n, 2);

    const auto gated = decide(testing_support::power_minus(2, 4), FamilySpec::sum({{1, 1}, {1, 0}}, 1));
    EXPECT_EQ(gated.outcome, Outcome::unresolved);
    EXPECT_TRUE(has_obstruction(gated, "out-of-method"));
}

TEST(Decide, SumGateValueTracksFixedPart)
{
    // u_n = (n - 1) 2^n, S_p = p + 1
    const NumberField Q = NumberField::rationals();
    const auto s = over(Q, {{Q.from_rational(2), {Q.from_rational(-1), Q.one()}}});
    const FamilySpec fam = FamilySpec::sum({{1, 1}, {1, 0}}, 1);
    // A(1) 2^2 = 0, even though v_2 = -4
    EXPECT_TRUE(sum_gate_value(s, fam).is_zero());
    // A(0) 2^1 for the pattern with no fixed part
    EXPECT_EQ(sum_gate_value(s, FamilySpec::sum({{1, 1}}, 1)), Q.from_rational(-2));
}

TEST(Decide, CeilingAndWitnesses)
{
    DecisionConfig cfg;
    cfg.verify.exact_ceiling = 100;
    cfg.verify.prefer_exact_below = 100;
    cfg.verify.witness_count = 0;
    const auto stuck = decide(testing_support::example1(), FamilySpec::prime_power(1, 1), cfg);
    EXPECT_EQ(stuck.outcome, Outcome::unresolved);
    EXPECT_TRUE(has_obstruction(stuck, "too-large"));
    cfg.verify.witness_count = 16;
    const auto witnessed = decide(testing_support::example1(), FamilySpec::prime_power(1, 1), cfg);
    EXPECT_EQ(witnessed.outcome, Outcome::no_zero);
    EXPECT_EQ(witnessed.evidence[0].kind, ZeroKind::nonzero_witness);
}

TEST(Decide, RationalInputIsScaled)
{
    // (3/2)^n - 9/4 has its zero at n = 2
    const NumberField Q = NumberField::rationals();
    const auto s = over(Q, {{Q.from_rational(Rational(3, 2)), {Q.one()}}, {Q.one(), {Q.from_rational(Rational(-9, 4))}}});
    const auto r = decide(s, FamilySpec::prime_power(1));
    EXPECT_EQ(r.root_scale, 2);
    EXPECT_EQ(r.outcome, Outcome::zero_found);
    EXPECT_EQ(r.zero->n, 2);
}

TEST(DecideProperty, DeterministicAcrossThreadCounts)
{
    Gen gen(41);
    for (int t = 0; t < 25; ++t) {
        const NumberField K = t % 2 ? testing_support::gaussian() : NumberField::rationals();
        const auto s = gen.sequence(K, 3, 1, 9, true);
        const FamilySpec fam = t % 3 == 0 ? FamilySpec::inertial(2) : FamilySpec::multiple(2);
        DecisionConfig one, many;
        many.threads = 4;
        const std::string a = io::report_to_json(decide(s, fam, one));
        const std::string b = io::report_to_json(decide(s, fam, many));
        EXPECT_EQ(a, b);
    }
}

TEST(DecideProperty, CertificatesReplay)
{
    Gen gen(42);
    int no_zero = 0;
    for (int t = 0; t < 40; ++t) {
        const NumberField K = t % 2 ? testing_support::gaussian() : NumberField::rationals();
        const auto s = gen.sequence(K, 3, 1, 9, true);
        const FamilySpec fam = t % 4 == 0 ? FamilySpec::inertial(2) : FamilySpec::prime_power(2);
        const DecisionConfig cfg;
        const auto r = decide(s, fam, cfg);
        const auto audit = audit_report(s, fam, cfg, r);
        EXPECT_TRUE(audit.ok) << (audit.problems.empty() ? "" : audit.problems.front());
        if (r.outcome != Outcome::no_zero) continue;
        ++no_zero;
        for (const auto& b : r.branches)
            if (b.membership != Membership::non_member) {
                EXPECT_NE(b.result, ZeroKind::zero);
            }
        for (const auto& m : r.multipliers)
            for (const auto& p : m.candidates)
                for (unsigned long k = 1; k <= fam.c; ++k) {
                    const bool covered = std::any_of(r.branches.begin(), r.branches.end(), [&](const Branch& b) {
                        return b.ell == m.ell && b.k == k && b.p == p &&
                               (b.result == ZeroKind::nonzero_exact || b.result == ZeroKind::nonzero_witness);
                    });
                    EXPECT_TRUE(covered || (fam.kind == Family::inertial &&
                                            std::binary_search(r.ramified_candidates.begin(),
                                                               r.ramified_candidates.end(), p)));
                }
    }
    EXPECT_GT(no_zero, 0);
}

TEST(Audit, DetectsTampering)
{
    const auto s = testing_support::power_minus(2, 32);
    const FamilySpec fam = FamilySpec::prime_power(1);
    const DecisionConfig cfg;
    const auto r = decide(s, fam, cfg);
    ASSERT_TRUE(audit_report(s, fam, cfg, r).ok);

    auto dropped = r;
    dropped.branches.pop_back();
    EXPECT_FALSE(audit_report(s, fam, cfg, dropped).ok);

    auto flipped = r;
    for (auto& e : flipped.evidence)
        if (e.kind == ZeroKind::zero) e.kind = ZeroKind::nonzero_exact;
    for (auto& b : flipped.branches)
        if (b.result == ZeroKind::zero) b.result = ZeroKind::nonzero_exact;
    flipped.outcome = Outcome::no_zero;
    flipped.zero.reset();
    EXPECT_FALSE(audit_report(s, fam, cfg, flipped).ok);

    auto candidates = r;
    candidates.multipliers[0].candidates.pop_back();
    EXPECT_FALSE(audit_report(s, fam, cfg, candidates).ok);
}

TEST(Congruence, SpecExamples)
{
    const auto s = testing_support::power_minus(2, 32);
    const NumberField& Q = s.field;
    EXPECT_EQ(congruence_gap(s, {GapMode::simple, 1, 3, 1, {}}), Q.from_rational(-26976));
    const auto g = congruence_gap(testing_support::example1(), {GapMode::simple, 1, 5, 1, {}});
    EXPECT_TRUE(all_divisible(g, 5));
    EXPECT_FALSE(g.is_zero());
    // k = 0 on a simple sequence: v_l - v_l
    EXPECT_TRUE(congruence_gap(s, {GapMode::simple, 2, 7, 0, {}}).is_zero());
}

TEST(Congruence, Preconditions)
{
    const NumberField K = testing_support::gaussian();
    const auto nonsimple = over(K, {{K.from_rational(2), {K.one(), K.one()}}, {K.element({1, 1}), {K.one()}}});
    EXPECT_THROW(congruence_gap(nonsimple, {GapMode::polynomial, 1, 3, 0, {}}), InvalidArgument);
    EXPECT_THROW(congruence_gap(nonsimple, {GapMode::inertial, 1, 2, 1, {}}), InvalidArgument);
    const auto algebraic = over(K, {{K.from_rational(2), {K.element({0, 1})}}});
    EXPECT_THROW(congruence_gap(algebraic, {GapMode::simple, 1, 3, 1, {}}), InvalidArgument);
    EXPECT_THROW(congruence_gap(testing_support::example1(), {GapMode::simple, 1, 4, 1, {}}), InvalidArgument);
}

TEST(CongruenceProperty, GapsDivisibleAndResidueAgrees)
{
    Gen gen(43);
    const std::vector<NumberField> fields{testing_support::gaussian(), testing_support::sqrt2(),
                                          testing_support::zeta5()};
    for (GapMode mode : {GapMode::simple, GapMode::polynomial, GapMode::inertial, GapMode::sum}) {
        for (int t = 0; t < 150; ++t) {
            const NumberField& K = fields[static_cast<std::size_t>(t) % fields.size()];
            const bool rational = mode == GapMode::simple || mode == GapMode::polynomial;
            std::vector<SumPart> pattern;
            if (mode == GapMode::sum) {
                const long parts = gen.uniform(1, 3);
                for (long j = 0; j < parts; ++j)
                    pattern.push_back({static_cast<unsigned long>(gen.uniform(1, 2)),
                                       static_cast<unsigned long>(gen.uniform(0, 2))});
            }
            // a fixed part (k = 0) only reduces correctly on simple sequences
            const bool fixed = std::any_of(pattern.begin(), pattern.end(), [](const SumPart& x) { return x.k == 0; });
            const auto s = gen.sequence(K, 3, mode == GapMode::simple || fixed ? 0 : 1, 9, rational);
            const auto ram = ramified_candidates(K);
            mpz_class p;
            do p = gen.pick(std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
            while (std::find(ram.begin(), ram.end(), p) != ram.end());
            GapQuery q{mode, static_cast<unsigned long>(gen.uniform(1, 3)), p,
                       static_cast<unsigned long>(gen.uniform(1, 2)), pattern};
            ModElement residue;
            try {
                residue = congruence_gap_residue(s, q);
            } catch (const InvalidArgument& e) {
                ADD_FAILURE() << e.what();
                continue;
            }
            EXPECT_TRUE(residue.is_zero()) << gap_mode_name(mode) << " p=" << p;
            // exact check when the indices are small enough to stay cheap
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), q.k);
            if (rational && pk <= 1000) {
                EXPECT_TRUE(all_divisible(congruence_gap(s, q), p)) << gap_mode_name(mode) << " p=" << p;
            }
        }
    }
}

TEST(Oracle, SpecExamples)
{
    const auto hit = brute_force_oracle(testing_support::power_minus(2, 32), FamilySpec::prime_power(1), 100);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(*hit, (OracleHit{5, 5, 1, 1}));
    EXPECT_FALSE(brute_force_oracle(testing_support::example1(), FamilySpec::prime_power(1, 1), 300).has_value());
}

TEST(Oracle, FilterDoesNotChangeAnswers)
{
    Gen gen(44);
    OracleOptions plain;
    plain.residue_filter = false;
    for (int t = 0; t < 30; ++t) {
        const NumberField K = t % 2 ? testing_support::gaussian() : NumberField::rationals();
        const auto s = gen.sequence(K, 3, 1, 9, true);
        const FamilySpec fam = FamilySpec::multiple(2);
        EXPECT_EQ(brute_force_oracle(s, fam, 60), brute_force_oracle(s, fam, 60, plain));
    }
}

TEST(Oracle, IndexBudget)
{
    OracleOptions tight;
    tight.max_index = 1000;
    EXPECT_THROW(brute_force_oracle(testing_support::example1(), FamilySpec::prime_power(2, 1), 100, tight),
                 ResourceExhausted);
}

TEST(OracleProperty, AgreesWithDecideOnSmallRun)
{
    Gen gen(45);
    for (int t = 0; t < 40; ++t) {
        const NumberField K = t % 2 ? testing_support::gaussian() : NumberField::rationals();
        const auto s = gen.sequence(K, 3, 1, 9, true);
        for (const FamilySpec& fam : {FamilySpec::prime_power(2), FamilySpec::multiple(2)}) {
            const auto r = decide(s, fam);
            const auto hit = brute_force_oracle(s, fam, 200);
            if (r.outcome == Outcome::unresolved) continue;
            if (r.outcome == Outcome::no_zero) {
                EXPECT_FALSE(hit.has_value()) << "oracle zero at " << hit->n;
            } else if (hit) {
                if (!r.zero->p || *r.zero->p <= 200)
                    EXPECT_EQ(r.zero->n, hit->n);
                else
                    EXPECT_LE(r.zero->n, hit->n);
            } else {
                ASSERT_TRUE(r.zero->p.has_value());
                EXPECT_GT(*r.zero->p, 200);
            }
            if (hit && hit->k >= 1) {
                const auto cp = candidate_primes(s, hit->ell);
                EXPECT_TRUE(std::binary_search(cp.primes.begin(), cp.primes.end(), hit->p));
            }
        }
    }
}
