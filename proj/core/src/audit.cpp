#include <algorithm>
#include <set>
#include <tuple>

#include "primezero/errors.hpp"
#include "primezero/skolem.hpp"

namespace primezero {

namespace {

constexpr unsigned long kReplayExactBelow = 4096;

mpz_class power(const mpz_class& p, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

class Auditor {
public:
    Auditor(const ExpPolySequence& w, const DecisionReport& report) : w_(w), report_(report)
    {
        for (const auto& b : report.branches) have_.insert(key(b.ell, b.k, b.p, b.f, b.n));
    }

    void fail(std::string s) { result.problems.push_back(std::move(s)); }

    void expect_branch(unsigned long ell, unsigned long k, const mpz_class& p, unsigned f, const mpz_class& n)
    {
        if (!have_.count(key(ell, k, p, f, n)))
            fail("missing branch l=" + std::to_string(ell) + " k=" + std::to_string(k) + " p=" + p.get_str() +
                 " f=" + std::to_string(f) + " n=" + n.get_str());
    }

    const ZeroStatus* evidence_for(const mpz_class& n) const
    {
        auto it = std::lower_bound(report_.evidence.begin(), report_.evidence.end(), n,
                                   [](const ZeroStatus& s, const mpz_class& v) { return s.n < v; });
        if (it == report_.evidence.end() || it->n != n) return nullptr;
        return &*it;
    }

    void replay(const ZeroStatus& s)
    {
        const std::string at = " at n=" + s.n.get_str();
        switch (s.kind) {
        case ZeroKind::nonzero_witness: {
            if (s.witnesses.empty() || !s.witnesses.back().nonzero) {
                fail("witness record without a nonzero witness" + at);
                return;
            }
            const mpz_class& q = s.witnesses.back().q;
            if (!is_prime(q)) fail("witness modulus is not prime" + at);
            if (eval_exp_poly_mod(w_, s.n, q).is_zero()) fail("witness image replays to zero" + at);
            return;
        }
        case ZeroKind::zero:
        case ZeroKind::nonzero_exact: {
            if (s.n > report_.verify.exact_ceiling) fail("exact record above the exact ceiling" + at);
            if (s.n > kReplayExactBelow && s.kind == ZeroKind::nonzero_exact) return;
            const bool zero = eval_exp_poly(w_, s.n).is_zero();
            if (zero != (s.kind == ZeroKind::zero)) fail("exact record disagrees with re-evaluation" + at);
            return;
        }
        case ZeroKind::unresolved_too_large:
            if (s.n <= report_.verify.exact_ceiling) fail("unresolved record below the exact ceiling" + at);
            return;
        }
    }

    AuditResult result;

private:
    using Key = std::tuple<unsigned long, unsigned long, mpz_class, unsigned, mpz_class>;
    static Key key(unsigned long ell, unsigned long k, const mpz_class& p, unsigned f, const mpz_class& n)
    {
        return {ell, k, p, f, n};
    }

    const ExpPolySequence& w_;
    const DecisionReport& report_;
    std::set<Key> have_;
};

} // namespace

AuditResult audit_report(const ExpPolySequence& seq, const FamilySpec& family, const DecisionConfig& config,
                         const DecisionReport& report)
{
    const ScaledSequence scaled = scale_to_integral(seq);
    const ExpPolySequence& w = scaled.sequence;
    const NumberField& K = w.field;
    Auditor a(w, report);

    if (!(report.family == family)) a.fail("report family differs from the audited family");
    if (report.root_scale != scaled.root_scale || report.coefficient_multiplier != scaled.coefficient_multiplier)
        a.fail("scaling constants differ");
    const unsigned long k_low = std::max<unsigned long>(1, family.min_k);
    const bool inertial_like = family.kind == Family::inertial || family.kind == Family::sum;
    const AssociatedSimple v = associated_simple(w);

    // every index the plan had to visit is present
    if (!v.identically_zero) {
        for (const auto& rec : report.multipliers) {
            const FieldElement expect =
                family.kind == Family::sum ? sum_gate_value(w, family) : eval_exp_poly(v.sequence, rec.ell);
            if (!(expect == rec.value)) a.fail("multiplier value mismatch for l=" + std::to_string(rec.ell));
            if (abs(nf_norm(K, rec.value).get_num()) != rec.norm)
                a.fail("norm mismatch for l=" + std::to_string(rec.ell));
            mpz_class rest = rec.norm;
            for (const auto& p : rec.candidates) {
                if (!is_prime(p)) a.fail("candidate " + p.get_str() + " is not prime");
                if (!mpz_divisible_p(rec.norm.get_mpz_t(), p.get_mpz_t()))
                    a.fail("candidate " + p.get_str() + " does not divide the norm");
                while (rest != 0 && mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
            }
            for (const auto& c : rec.unfactored)
                while (rest != 0 && c > 1 && mpz_divisible_p(rest.get_mpz_t(), c.get_mpz_t())) rest /= c;
            if (rest != 1) a.fail("candidates do not account for the whole norm of l=" + std::to_string(rec.ell));

            for (const auto& p : rec.candidates) {
                const bool ramified = std::binary_search(report.ramified_candidates.begin(),
                                                         report.ramified_candidates.end(), p);
                if (inertial_like && ramified) continue;
                const unsigned f = inertial_like ? splitting_data(K, p).f : 1;
                if (family.kind == Family::sum) {
                    mpz_class n = 0;
                    for (const auto& part : family.pattern) n += part.l * power(p, part.k * f);
                    a.expect_branch(rec.ell, 0, p, f, n);
                } else {
                    for (unsigned long k = k_low; k <= family.c; ++k)
                        a.expect_branch(rec.ell, k, p, f, rec.ell * power(p, k * f));
                }
            }
        }
        if (inertial_like && !report.multipliers.empty()) {
            const auto expected = ramified_candidates(K, config.effort);
            if (expected != report.ramified_candidates) a.fail("ramified candidate set differs");
            for (const auto& p : expected) {
                for (unsigned f = 1; f <= K.degree(); ++f) {
                    if (K.degree() % f) continue;
                    for (const auto& rec : report.multipliers) {
                        if (family.kind == Family::sum) {
                            mpz_class n = 0;
                            for (const auto& part : family.pattern) n += part.l * power(p, part.k * f);
                            a.expect_branch(rec.ell, 0, p, f, n);
                        } else {
                            for (unsigned long k = k_low; k <= family.c; ++k)
                                a.expect_branch(rec.ell, k, p, f, rec.ell * power(p, k * f));
                        }
                    }
                }
            }
        }
    }

    for (const auto& b : report.branches) {
        const ZeroStatus* s = a.evidence_for(b.n);
        if (!s) {
            a.fail("no evidence for n=" + b.n.get_str());
            continue;
        }
        if (s->kind != b.result) a.fail("branch result differs from evidence at n=" + b.n.get_str());
    }
    for (const auto& s : report.evidence) a.replay(s);

    switch (report.outcome) {
    case Outcome::no_zero:
        if (!report.obstructions.empty()) a.fail("no-zero outcome with obstructions");
        for (const auto& b : report.branches) {
            if (b.membership == Membership::non_member) continue;
            if (b.result != ZeroKind::nonzero_exact && b.result != ZeroKind::nonzero_witness)
                a.fail("no-zero outcome but branch n=" + b.n.get_str() + " is not certified nonzero");
        }
        break;
    case Outcome::zero_found: {
        if (!report.zero) {
            a.fail("zero-found outcome without a zero");
            break;
        }
        const ZeroStatus* s = a.evidence_for(report.zero->n);
        if (!s || s->kind != ZeroKind::zero) a.fail("reported zero lacks exact zero evidence");
        const bool member = std::any_of(report.branches.begin(), report.branches.end(), [&](const Branch& b) {
            return b.n == report.zero->n && b.membership == Membership::member;
        });
        if (!member) a.fail("reported zero is not a certified family member");
        break;
    }
    case Outcome::unresolved:
        if (report.obstructions.empty()) a.fail("unresolved outcome without obstructions");
        break;
    }

    a.result.ok = a.result.problems.empty();
    return a.result;
}

} // namespace primezero
