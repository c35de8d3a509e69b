#include "primezero/skolem.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "primezero/errors.hpp"

namespace primezero {

const char* family_name(Family f)
{
    switch (f) {
    case Family::prime_power: return "prime-power";
    case Family::prime_power_multiple: return "multiple";
    case Family::inertial: return "inertial";
    case Family::sum: return "sum";
    }
    return "?";
}

const char* zero_kind_name(ZeroKind k)
{
    switch (k) {
    case ZeroKind::zero: return "zero";
    case ZeroKind::nonzero_exact: return "nonzero-exact";
    case ZeroKind::nonzero_witness: return "nonzero-witness";
    case ZeroKind::unresolved_too_large: return "unresolved-too-large";
    }
    return "?";
}

const char* branch_source_name(BranchSource s)
{
    switch (s) {
    case BranchSource::base: return "base";
    case BranchSource::candidate: return "candidate";
    case BranchSource::ramified: return "ramified";
    }
    return "?";
}

const char* membership_name(Membership m)
{
    switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    case Membership::uncertified: return "uncertified";
    }
    return "?";
}

const char* outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::zero_found: return "zero-found";
    case Outcome::no_zero: return "no-zero";
    case Outcome::unresolved: return "unresolved";
    }
    return "?";
}

FamilySpec FamilySpec::prime_power(unsigned long c, unsigned long min_k)
{
    return FamilySpec{Family::prime_power, c, min_k, {}};
}

FamilySpec FamilySpec::multiple(unsigned long c, unsigned long min_k)
{
    return FamilySpec{Family::prime_power_multiple, c, min_k, {}};
}

FamilySpec FamilySpec::inertial(unsigned long c, unsigned long min_k)
{
    return FamilySpec{Family::inertial, c, min_k, {}};
}

FamilySpec FamilySpec::sum(std::vector<SumPart> pattern, unsigned long c)
{
    return FamilySpec{Family::sum, c, 0, std::move(pattern)};
}

unsigned long FamilySpec::pattern_weight() const
{
    unsigned long s = 0;
    for (const auto& part : pattern) s += part.l;
    return s;
}

unsigned long FamilySpec::pattern_fixed_part() const
{
    unsigned long s = 0;
    for (const auto& part : pattern)
        if (part.k == 0) s += part.l;
    return s;
}

void FamilySpec::validate() const
{
    if (kind == Family::sum) {
        if (pattern.empty()) throw InvalidArgument("sum family needs at least one (l, k) part");
        for (const auto& part : pattern) {
            if (part.l == 0) throw InvalidArgument("sum family: every l_j must be positive");
            if (part.l > c || part.k > c) throw InvalidArgument("sum family: every l_j and k_j must be at most c");
        }
        if (min_k != 0) throw InvalidArgument("sum family: min_k is fixed by the pattern");
        return;
    }
    if (!pattern.empty()) throw InvalidArgument("only the sum family takes a pattern");
    if (min_k > c) throw InvalidArgument("min_k exceeds c");
}

// ------------------------------------------------------------ verification

std::vector<mpz_class> witness_primes(unsigned count, std::uint64_t seed, const mpz_class& avoid)
{
    std::mt19937_64 gen(seed);
    std::vector<mpz_class> out;
    while (out.size() < count) {
        const std::uint64_t x = (gen() >> 2) | (std::uint64_t{1} << 61);
        mpz_class start;
        mpz_import(start.get_mpz_t(), 1, 1, sizeof x, 0, 0, &x);
        mpz_class q = next_prime(start);
        if (avoid != 0 && mpz_divisible_p(avoid.get_mpz_t(), q.get_mpz_t())) continue;
        if (std::find(out.begin(), out.end(), q) != out.end()) continue;
        out.push_back(std::move(q));
    }
    return out;
}

namespace {

void evaluate_exactly(const ExpPolySequence& seq, ZeroStatus& s)
{
    s.value = eval_exp_poly(seq, s.n);
    s.kind = s.value->is_zero() ? ZeroKind::zero : ZeroKind::nonzero_exact;
}

} // namespace

ZeroStatus verify_candidate(const ExpPolySequence& seq, const mpz_class& n, const VerifyConfig& config,
                            const std::vector<mpz_class>& witnesses)
{
    if (!seq.integral_certified) throw InvalidArgument("verify_candidate: sequence is not integral");
    if (n < 0) throw InvalidArgument("verify_candidate: negative index");
    ZeroStatus s;
    s.n = n;
    if (n <= config.prefer_exact_below && n <= config.exact_ceiling) {
        evaluate_exactly(seq, s);
        return s;
    }
    for (const auto& q : witnesses) {
        const bool nonzero = !eval_exp_poly_mod(seq, n, q).is_zero();
        s.witnesses.push_back({q, nonzero});
        if (nonzero) {
            s.kind = ZeroKind::nonzero_witness;
            return s;
        }
    }
    if (n <= config.exact_ceiling)
        evaluate_exactly(seq, s);
    else
        s.kind = ZeroKind::unresolved_too_large;
    return s;
}

ZeroStatus verify_candidate(const ExpPolySequence& seq, const mpz_class& n, const VerifyConfig& config)
{
    return verify_candidate(seq, n, config, witness_primes(config.witness_count, config.witness_seed));
}

// ------------------------------------------------------------- candidates

AdmissibleMultipliers admissible_multipliers(const ExpPolySequence& seq, unsigned long c)
{
    AdmissibleMultipliers out;
    const AssociatedSimple v = associated_simple(seq);
    if (v.identically_zero) {
        out.short_circuit = true;
        return out;
    }
    for (unsigned long ell = 1; ell <= c; ++ell) {
        FieldElement value = eval_exp_poly(v.sequence, ell);
        if (!value.is_zero()) out.multipliers.push_back({ell, std::move(value)});
    }
    return out;
}

CandidatePrimes candidate_primes(const NumberField& K, const FieldElement& b, const FactorEffort& effort)
{
    if (b.is_zero()) throw InvalidArgument("candidate_primes: zero element has no norm bound");
    if (!b.is_integral()) throw InvalidArgument("candidate_primes: element must have integer coordinates");
    const Rational norm = nf_norm(K, b);
    CandidatePrimes out;
    out.norm = abs(norm.get_num());
    try {
        out.primes = distinct(factor_integer(out.norm, effort));
    } catch (const PartialFactorization& e) {
        out.primes = distinct(e.primes());
        out.unfactored = e.cofactors();
    }
    return out;
}

CandidatePrimes candidate_primes(const ExpPolySequence& seq, unsigned long ell, const FactorEffort& effort)
{
    const AssociatedSimple v = associated_simple(seq);
    return candidate_primes(seq.field, eval_exp_poly(v.sequence, ell), effort);
}

FieldElement sum_gate_value(const ExpPolySequence& seq, const FamilySpec& family)
{
    const NumberField& K = seq.field;
    const Rational s0(family.pattern_fixed_part());
    const unsigned long s1 = family.pattern_weight();
    FieldElement sum = K.zero();
    for (const auto& t : seq.terms) {
        FieldElement a = t.coeffs.back();
        for (std::size_t j = t.coeffs.size() - 1; j-- > 0;) a = nf_add(K, nf_scale(K, a, s0), t.coeffs[j]);
        if (a.is_zero()) continue;
        sum = nf_add(K, sum, nf_mul(K, a, nf_pow(K, t.root, s1)));
    }
    return sum;
}

// ---------------------------------------------------------------- decide

namespace {

std::vector<unsigned> divisors(std::size_t d)
{
    std::vector<unsigned> out;
    for (unsigned f = 1; f <= d; ++f)
        if (d % f == 0) out.push_back(f);
    return out;
}

mpz_class power(const mpz_class& p, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

mpz_class sum_index(const FamilySpec& family, const mpz_class& p, unsigned f)
{
    mpz_class n = 0;
    for (const auto& part : family.pattern) n += part.l * power(p, part.k * f);
    return n;
}

auto branch_key(const Branch& b) { return std::tie(b.ell, b.k, b.p, b.f, b.n); }

std::vector<ZeroStatus> run_jobs(const ExpPolySequence& seq, const std::vector<mpz_class>& indices,
                                 const VerifyConfig& config, const std::vector<mpz_class>& witnesses, unsigned threads)
{
    std::vector<ZeroStatus> results(indices.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < indices.size(); i = next++)
            results[i] = verify_candidate(seq, indices[i], config, witnesses);
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(indices.size())));
    if (count <= 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_lock;
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back([&] {
            try {
                worker();
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
                next = indices.size();
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

class Planner {
public:
    Planner(const ExpPolySequence& w, const FamilySpec& family, const DecisionConfig& config, DecisionReport& report)
        : w_(w), K_(w.field), family_(family), config_(config), report_(report)
    {
    }

    void add(BranchSource source, unsigned long ell, unsigned long k, const mpz_class& p, unsigned f, mpz_class n,
             Membership m)
    {
        report_.branches.push_back(Branch{source, ell, k, p, f, std::move(n), m, ZeroKind::unresolved_too_large});
    }

    unsigned long k_low() const { return std::max<unsigned long>(1, family_.min_k); }

    MultiplierRecord& record_candidates(unsigned long ell, const FieldElement& value)
    {
        CandidatePrimes cp = candidate_primes(K_, value, config_.effort);
        for (const auto& c : cp.unfactored)
            report_.obstructions.push_back(
                {"partial-factorization", "norm cofactor " + c.get_str() + " for multiplier " + std::to_string(ell) +
                                              " was not factored within the effort budget"});
        report_.multipliers.push_back({ell, value, cp.norm, std::move(cp.primes), std::move(cp.unfactored)});
        return report_.multipliers.back();
    }

    bool is_ramified(const mpz_class& p) const
    {
        return std::binary_search(report_.ramified_candidates.begin(), report_.ramified_candidates.end(), p);
    }

    void load_ramified()
    {
        try {
            report_.ramified_candidates = ramified_candidates(K_, config_.effort);
        } catch (const PartialFactorization& e) {
            report_.ramified_candidates = distinct(e.primes());
            for (const auto& c : e.cofactors())
                report_.obstructions.push_back(
                    {"partial-factorization", "discriminant cofactor " + c.get_str() + " was not factored"});
        }
        std::sort(report_.ramified_candidates.begin(), report_.ramified_candidates.end());
    }

    // Every ramified-candidate prime over all f' dividing d; membership
    // follows the certified inertial degree when there is one.
    template <class IndexFn>
    void enumerate_ramified(IndexFn index_of)
    {
        for (const auto& p : report_.ramified_candidates) {
            SplittingData sd = splitting_data(K_, p);
            const bool certified = sd.status == SplitStatus::certified;
            for (unsigned f : divisors(K_.degree())) {
                const Membership m =
                    !certified ? Membership::uncertified : (f == sd.f ? Membership::member : Membership::non_member);
                index_of(p, f, m);
            }
            report_.ramified.push_back({p, std::move(sd),
                                        certified ? "exhaustive over f' | d; membership at certified f"
                                                  : "exhaustive over f' | d; index obstructed, zeros uncertified"});
        }
    }

private:
    const ExpPolySequence& w_;
    const NumberField& K_;
    const FamilySpec& family_;
    const DecisionConfig& config_;
    DecisionReport& report_;
};

void plan_prime_power(Planner& plan, DecisionReport& report, const std::vector<FieldElement>& v,
                      const FamilySpec& family)
{
    if (family.min_k == 0) plan.add(BranchSource::base, 1, 0, 0, 1, 1, Membership::member);
    if (plan.k_low() > family.c) return;
    if (v[1].is_zero()) {
        report.excluded_multipliers.push_back(1);
        report.obstructions.push_back(
            {"vanishing-v1", "v_1 = 0, so the norm argument gives no bound on p for n = p^k with k >= 1"});
        return;
    }
    const MultiplierRecord& rec = plan.record_candidates(1, v[1]);
    for (const auto& p : rec.candidates)
        for (unsigned long k = plan.k_low(); k <= family.c; ++k)
            plan.add(BranchSource::candidate, 1, k, p, 1, power(p, k), Membership::member);
}

void plan_multiplier_family(Planner& plan, DecisionReport& report, const NumberField& K,
                            const std::vector<FieldElement>& v, const FamilySpec& family)
{
    const bool inertial = family.kind == Family::inertial;
    std::vector<unsigned long> ells;
    for (unsigned long ell = 1; ell <= family.c; ++ell) {
        if (v[ell].is_zero())
            report.excluded_multipliers.push_back(ell);
        else
            ells.push_back(ell);
    }
    if (family.min_k == 0)
        for (unsigned long ell : ells) plan.add(BranchSource::base, ell, 0, 0, 1, ell, Membership::member);
    if (plan.k_low() > family.c) return;

    if (inertial) plan.load_ramified();
    for (unsigned long ell : ells) {
        const MultiplierRecord& rec = plan.record_candidates(ell, v[ell]);
        for (const auto& p : rec.candidates) {
            if (inertial && plan.is_ramified(p)) continue;
            const unsigned f = inertial ? splitting_data(K, p).f : 1;
            for (unsigned long k = plan.k_low(); k <= family.c; ++k)
                plan.add(BranchSource::candidate, ell, k, p, f, ell * power(p, k * f), Membership::member);
        }
    }
    if (!inertial) return;
    plan.enumerate_ramified([&](const mpz_class& p, unsigned f, Membership m) {
        for (unsigned long ell : ells)
            for (unsigned long k = plan.k_low(); k <= family.c; ++k)
                plan.add(BranchSource::ramified, ell, k, p, f, ell * power(p, k * f), m);
    });
}

void plan_sum(Planner& plan, DecisionReport& report, const ExpPolySequence& w, const FamilySpec& family)
{
    const NumberField& K = w.field;
    const unsigned long s1 = family.pattern_weight();
    const bool moving = std::any_of(family.pattern.begin(), family.pattern.end(), [](const SumPart& s) { return s.k > 0; });
    if (!moving) {
        plan.add(BranchSource::base, s1, 0, 0, 1, s1, Membership::member);
        return;
    }
    const FieldElement v_s1 = eval_exp_poly(associated_simple(w).sequence, s1);
    if (v_s1.is_zero()) {
        report.excluded_multipliers.push_back(s1);
        report.obstructions.push_back({"out-of-method", "v_{S_1} = 0 for S_1 = " + std::to_string(s1)});
        return;
    }
    const FieldElement gate = sum_gate_value(w, family);
    if (gate.is_zero()) {
        report.obstructions.push_back(
            {"out-of-method", "the value sum A_i(s0) lambda_i^S1 that u_{S_p} reduces to vanishes"});
        return;
    }
    plan.load_ramified();
    const MultiplierRecord& rec = plan.record_candidates(s1, gate);
    for (const auto& p : rec.candidates) {
        if (plan.is_ramified(p)) continue;
        const unsigned f = splitting_data(K, p).f;
        plan.add(BranchSource::candidate, s1, 0, p, f, sum_index(family, p, f), Membership::member);
    }
    plan.enumerate_ramified([&](const mpz_class& p, unsigned f, Membership m) {
        plan.add(BranchSource::ramified, s1, 0, p, f, sum_index(family, p, f), m);
    });
}

} // namespace

DecisionReport decide(const ExpPolySequence& seq, const FamilySpec& family, const DecisionConfig& config)
{
    family.validate();
    const bool needs_split = family.kind == Family::inertial || family.kind == Family::sum;
    if (!needs_split && !seq.has_rational_coefficients())
        throw InvalidArgument(std::string(family_name(family.kind)) +
                              " family needs rational coefficient polynomials A_i; use the inertial family for "
                              "algebraic coefficients");
    if (needs_split && !seq.field.galois_claimed() && seq.field.degree() > 2)
        throw InvalidArgument(std::string(family_name(family.kind)) + " family needs a field claimed Galois");

    DecisionReport report;
    report.family = family;
    report.verify = config.verify;

    const ScaledSequence scaled = scale_to_integral(seq);
    const ExpPolySequence& w = scaled.sequence;
    report.root_scale = scaled.root_scale;
    report.coefficient_multiplier = scaled.coefficient_multiplier;
    report.witness_primes = witness_primes(config.verify.witness_count, config.verify.witness_seed,
                                           scaled.root_scale * scaled.coefficient_multiplier);

    const AssociatedSimple assoc = associated_simple(w);
    Planner plan(w, family, config, report);
    if (assoc.identically_zero) {
        report.short_circuit = true;
        plan.add(BranchSource::base, 0, 0, 0, 1, 0, Membership::member);
    } else {
        const unsigned long top = family.kind == Family::prime_power ? 1
                                  : family.kind == Family::sum      ? 0
                                                                    : family.c;
        std::vector<FieldElement> v(top + 1);
        for (unsigned long ell = 1; ell <= top; ++ell) v[ell] = eval_exp_poly(assoc.sequence, ell);
        switch (family.kind) {
        case Family::prime_power: plan_prime_power(plan, report, v, family); break;
        case Family::prime_power_multiple:
        case Family::inertial: plan_multiplier_family(plan, report, w.field, v, family); break;
        case Family::sum: plan_sum(plan, report, w, family); break;
        }
    }

    std::sort(report.branches.begin(), report.branches.end(),
              [](const Branch& a, const Branch& b) { return branch_key(a) < branch_key(b); });

    std::vector<mpz_class> indices;
    for (const auto& b : report.branches) indices.push_back(b.n);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    report.evidence = run_jobs(w, indices, config.verify, report.witness_primes, config.threads);

    for (auto& b : report.branches) {
        const auto it = std::lower_bound(indices.begin(), indices.end(), b.n);
        b.result = report.evidence[static_cast<std::size_t>(it - indices.begin())].kind;
    }

    const Branch* hit = nullptr;
    for (const auto& b : report.branches) {
        if (b.membership == Membership::member && b.result == ZeroKind::zero) {
            if (!hit || b.n < hit->n) hit = &b;
        }
        if (b.membership == Membership::non_member) continue;
        if (b.result == ZeroKind::unresolved_too_large)
            report.obstructions.push_back({"too-large", "index " + b.n.get_str() + " exceeds the exact ceiling and no "
                                                                                  "witness prime certified it nonzero"});
        if (b.membership == Membership::uncertified && b.result == ZeroKind::zero)
            report.obstructions.push_back({"uncertified-zero", "zero found at index " + b.n.get_str() + " for p = " +
                                                                   b.p.get_str() + ", f' = " + std::to_string(b.f) +
                                                                   ", family membership uncertified"});
    }
    if (hit) {
        report.outcome = Outcome::zero_found;
        ZeroHit z{hit->n, hit->ell, std::nullopt, std::nullopt, hit->f};
        if (hit->source != BranchSource::base) z.p = hit->p;
        if (family.kind != Family::sum && hit->ell != 0) z.k = hit->k;
        report.zero = std::move(z);
    } else {
        report.outcome = report.obstructions.empty() ? Outcome::no_zero : Outcome::unresolved;
    }
    return report;
}

} // namespace primezero
