#include <algorithm>

#include "primezero/errors.hpp"
#include "primezero/skolem.hpp"

namespace primezero {

const char* gap_mode_name(GapMode m)
{
    switch (m) {
    case GapMode::simple: return "simple";
    case GapMode::polynomial: return "polynomial";
    case GapMode::inertial: return "inertial";
    case GapMode::sum: return "sum";
    }
    return "?";
}

namespace {

struct GapPlan {
    mpz_class left_power = 1;  ///< exponent on v_left (1 means no power)
    mpz_class left_index;      ///< v index on the left
    mpz_class right_index;     ///< index on the right
    bool left_is_u = false;    ///< sum mode: left side is u, right side is v
    bool right_is_u = false;
};

mpz_class power(const mpz_class& p, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

GapPlan plan_gap(const ExpPolySequence& seq, const GapQuery& q)
{
    if (!seq.integral_certified) throw InvalidArgument("congruence_gap: sequence is not integral");
    if (q.p < 2 || !is_prime(q.p)) throw InvalidArgument("congruence_gap: p must be prime");
    const NumberField& K = seq.field;
    const bool simple = seq.is_simple();
    GapPlan plan;

    if (q.mode == GapMode::simple || q.mode == GapMode::polynomial) {
        const bool rational = q.mode == GapMode::simple ? associated_simple(seq).sequence.has_rational_coefficients()
                                                        : seq.has_rational_coefficients();
        if (!rational) throw InvalidArgument("congruence_gap: this mode needs rational coefficients");
        if (q.mode == GapMode::polynomial && q.k == 0 && !simple)
            throw InvalidArgument("congruence_gap: k = 0 needs a simple sequence");
        plan.left_power = power(q.p, q.k);
        plan.left_index = q.ell;
        plan.right_index = q.ell * plan.left_power;
        plan.right_is_u = q.mode == GapMode::polynomial;
        return plan;
    }

    const auto ram = ramified_candidates(K);
    if (std::find(ram.begin(), ram.end(), q.p) != ram.end())
        throw InvalidArgument("congruence_gap: p = " + q.p.get_str() + " may ramify; the congruence needs p unramified");
    const unsigned f = splitting_data(K, q.p).f;

    if (q.mode == GapMode::inertial) {
        if (q.k == 0 && !simple) throw InvalidArgument("congruence_gap: k = 0 needs a simple sequence");
        plan.left_index = q.ell;
        plan.right_index = q.ell * power(q.p, q.k * f);
        plan.right_is_u = true;
        return plan;
    }

    if (q.pattern.empty()) throw InvalidArgument("congruence_gap: sum mode needs a pattern");
    mpz_class sp = 0;
    unsigned long s1 = 0;
    for (const auto& part : q.pattern) {
        if (part.k == 0 && !simple) throw InvalidArgument("congruence_gap: k_j = 0 needs a simple sequence");
        sp += part.l * power(q.p, part.k * f);
        s1 += part.l;
    }
    plan.left_is_u = true;
    plan.left_index = sp;
    plan.right_index = s1;
    return plan;
}

} // namespace

FieldElement congruence_gap(const ExpPolySequence& seq, const GapQuery& query)
{
    const GapPlan plan = plan_gap(seq, query);
    const NumberField& K = seq.field;
    const ExpPolySequence v = associated_simple(seq).sequence;
    if (mpz_sizeinbase(plan.left_power.get_mpz_t(), 2) > 32)
        throw ResourceExhausted("congruence_gap: exponent too large for exact evaluation; use the residue form");

    FieldElement left = eval_exp_poly(plan.left_is_u ? seq : v, plan.left_index);
    if (plan.left_power != 1) left = nf_pow(K, left, plan.left_power);
    const FieldElement right = eval_exp_poly(plan.right_is_u ? seq : v, plan.right_index);
    return nf_sub(K, left, right);
}

ModElement congruence_gap_residue(const ExpPolySequence& seq, const GapQuery& query)
{
    const GapPlan plan = plan_gap(seq, query);
    const NumberField& K = seq.field;
    const ExpPolySequence v = associated_simple(seq).sequence;

    ModElement left = eval_exp_poly_mod(plan.left_is_u ? seq : v, plan.left_index, query.p);
    if (plan.left_power != 1) left = nf_mod_pow(K, left, plan.left_power);
    const ModElement right = eval_exp_poly_mod(plan.right_is_u ? seq : v, plan.right_index, query.p);
    return nf_mod_sub(K, left, right);
}

} // namespace primezero
