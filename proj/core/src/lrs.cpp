#include "primezero/lrs.hpp"

#include <algorithm>
#include <set>

#include "linalg.hpp"
#include "primezero/errors.hpp"

namespace primezero {

void RecurrenceSpec::validate() const
{
    if (coeffs.size() != initial.size())
        throw InvalidArgument("recurrence: number of coefficients and initial values differ");
    if (!coeffs.empty() && coeffs.back() == 0) throw InvalidArgument("recurrence: last coefficient must be nonzero");
}

std::vector<Rational> characteristic_polynomial(const RecurrenceSpec& spec)
{
    const std::size_t l = spec.order();
    std::vector<Rational> p(l + 1);
    p[l] = 1;
    for (std::size_t j = 1; j <= l; ++j) p[l - j] = -spec.coeffs[j - 1];
    return p;
}

namespace {

constexpr unsigned long kLinearLimit = 10'000;

using RatMatrix = detail::RatMatrix;

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b)
{
    const std::size_t n = a.size();
    RatMatrix r(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

} // namespace

std::vector<Rational> recurrence_terms(const RecurrenceSpec& spec, std::size_t count)
{
    spec.validate();
    std::vector<Rational> u;
    u.reserve(count);
    const std::size_t l = spec.order();
    for (std::size_t n = 0; n < count; ++n) {
        if (l == 0) {
            u.emplace_back(0);
        } else if (n < l) {
            u.push_back(spec.initial[n]);
        } else {
            Rational s = 0;
            for (std::size_t j = 1; j <= l; ++j) s += spec.coeffs[j - 1] * u[n - j];
            u.push_back(s);
        }
    }
    return u;
}

Rational eval_recurrence(const RecurrenceSpec& spec, unsigned long n) { return eval_recurrence(spec, mpz_class(n)); }

Rational eval_recurrence(const RecurrenceSpec& spec, const mpz_class& n)
{
    spec.validate();
    if (n < 0) throw InvalidArgument("eval_recurrence: negative index");
    const std::size_t l = spec.order();
    if (l == 0) return 0;
    if (n < static_cast<unsigned long>(l)) return spec.initial[n.get_ui()];
    if (n <= kLinearLimit) return recurrence_terms(spec, n.get_ui() + 1).back();

    // companion matrix: state (u_k, ..., u_{k+l-1}) -> (u_{k+1}, ..., u_{k+l})
    RatMatrix c(l, std::vector<mpq_class>(l));
    for (std::size_t i = 0; i + 1 < l; ++i) c[i][i + 1] = 1;
    for (std::size_t j = 0; j < l; ++j) c[l - 1][j] = spec.coeffs[l - 1 - j];
    RatMatrix power(l, std::vector<mpq_class>(l));
    for (std::size_t i = 0; i < l; ++i) power[i][i] = 1;
    const long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    for (long b = bits - 1; b >= 0; --b) {
        power = matmul(power, power);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(b))) power = matmul(power, c);
    }
    Rational s = 0;
    for (std::size_t j = 0; j < l; ++j) s += power[0][j] * spec.initial[j];
    return s;
}

RecurrenceSpec minimal_recurrence(const RecurrenceSpec& spec)
{
    spec.validate();
    const std::size_t L = spec.order();
    if (L == 0) return {};
    const std::vector<Rational> u = recurrence_terms(spec, 2 * L);
    RatMatrix h(L, std::vector<mpq_class>(L));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j) h[i][j] = u[i + j];
    const std::size_t r = detail::rank(h);
    if (r == 0) return {};

    RatMatrix sys(r, std::vector<mpq_class>(r));
    std::vector<mpq_class> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 1; j <= r; ++j) sys[i][j - 1] = u[i + r - j];
        rhs[i] = u[i + r];
    }
    auto a = detail::solve(sys, rhs);
    if (!a) throw InternalConsistency("minimal_recurrence: leading Hankel minor is singular");
    RecurrenceSpec out{std::move(*a), std::vector<Rational>(u.begin(), u.begin() + static_cast<long>(r))};
    if (recurrence_terms(out, 2 * L) != u) throw InternalConsistency("minimal_recurrence: reduced recurrence disagrees");
    return out;
}

// ------------------------------------------------------ exponential form

void ExpPolySequence::validate()
{
    bool integral = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const ExpTerm& t = terms[i];
        if (!field.contains(t.root)) throw InvalidArgument("sequence: root has wrong coordinate count");
        if (t.coeffs.empty()) throw InvalidArgument("sequence: zero coefficient polynomial");
        if (t.coeffs.back().is_zero()) throw InvalidArgument("sequence: coefficient polynomial not trimmed");
        for (const auto& c : t.coeffs) {
            if (!field.contains(c)) throw InvalidArgument("sequence: coefficient has wrong coordinate count");
            integral = integral && c.is_integral();
        }
        integral = integral && t.root.is_integral();
        for (std::size_t j = 0; j < i; ++j)
            if (terms[j].root == t.root) throw InvalidArgument("sequence: roots must be pairwise distinct");
    }
    integral_certified = integral;
}

bool ExpPolySequence::is_simple() const
{
    return std::all_of(terms.begin(), terms.end(), [](const ExpTerm& t) { return t.coeffs.size() <= 1; });
}

bool ExpPolySequence::has_rational_coefficients() const
{
    for (const auto& t : terms)
        for (const auto& c : t.coeffs)
            if (!c.is_rational()) return false;
    return true;
}

ExpPolySequence make_sequence(NumberField field, std::vector<ExpTerm> terms)
{
    for (auto& t : terms)
        while (!t.coeffs.empty() && t.coeffs.back().is_zero()) t.coeffs.pop_back();
    ExpPolySequence s{std::move(field), std::move(terms), false};
    s.validate();
    return s;
}

namespace {

using KPoly = std::vector<FieldElement>;

// Divides by (x - r) in place if r is a root; returns false otherwise.
bool deflate(const NumberField& K, KPoly& p, const FieldElement& r)
{
    if (p.size() < 2) return false;
    const std::size_t n = p.size() - 1;
    KPoly q(n);
    FieldElement acc = p[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = acc;
        acc = nf_add(K, p[i], nf_mul(K, acc, r));
    }
    if (!acc.is_zero()) return false;
    p = std::move(q);
    return true;
}

// Gaussian elimination over K.
std::vector<FieldElement> solve_over_field(const NumberField& K, std::vector<std::vector<FieldElement>> m,
                                           std::vector<FieldElement> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) throw InternalConsistency("to_exp_poly: singular confluent Vandermonde system");
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        const FieldElement inv = nf_inverse(K, m[c][c]);
        for (std::size_t j = c; j < n; ++j) m[c][j] = nf_mul(K, m[c][j], inv);
        rhs[c] = nf_mul(K, rhs[c], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            const FieldElement f = m[i][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] = nf_sub(K, m[i][j], nf_mul(K, f, m[c][j]));
            rhs[i] = nf_sub(K, rhs[i], nf_mul(K, f, rhs[c]));
        }
    }
    return rhs;
}

} // namespace

ExpPolySequence to_exp_poly(const RecurrenceSpec& spec, const NumberField& K, const std::vector<RootMultiplicity>& roots)
{
    const RecurrenceSpec minimal = minimal_recurrence(spec);
    const std::size_t r = minimal.order();

    unsigned total = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!K.contains(roots[i].root)) throw InvalidRoots("root has wrong coordinate count for the field");
        if (roots[i].multiplicity == 0) throw InvalidRoots("root multiplicity must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (roots[j].root == roots[i].root) throw InvalidRoots("roots must be pairwise distinct");
        total += roots[i].multiplicity;
    }
    if (total != r)
        throw InvalidRoots("root multiplicities sum to " + std::to_string(total) + " but the minimal order is " +
                           std::to_string(r));

    KPoly chi;
    for (const auto& c : characteristic_polynomial(minimal)) chi.push_back(K.from_rational(c));
    for (const auto& rm : roots) {
        unsigned mult = 0;
        KPoly work = chi;
        while (deflate(K, work, rm.root)) ++mult;
        if (mult != rm.multiplicity)
            throw InvalidRoots("root " + rm.root.to_string() + " has multiplicity " + std::to_string(mult) +
                               " in the minimal polynomial, not " + std::to_string(rm.multiplicity));
    }
    if (r == 0) return ExpPolySequence{K, {}, true};

    // columns: (i, j) -> n^j lambda_i^n for n = 0 .. r-1
    std::vector<std::vector<FieldElement>> m(r);
    for (std::size_t n = 0; n < r; ++n) {
        for (const auto& rm : roots) {
            const FieldElement pw = nf_pow(K, rm.root, static_cast<unsigned long>(n));
            mpz_class nj = 1;
            for (unsigned j = 0; j < rm.multiplicity; ++j) {
                m[n].push_back(nf_scale(K, pw, Rational(nj)));
                nj *= static_cast<unsigned long>(n);
            }
        }
    }
    std::vector<FieldElement> rhs;
    for (std::size_t n = 0; n < r; ++n) rhs.push_back(K.from_rational(minimal.initial[n]));
    const std::vector<FieldElement> sol = solve_over_field(K, std::move(m), std::move(rhs));

    std::vector<ExpTerm> terms;
    std::size_t k = 0;
    for (const auto& rm : roots) {
        ExpTerm t{rm.root, {}};
        for (unsigned j = 0; j < rm.multiplicity; ++j) t.coeffs.push_back(sol[k++]);
        terms.push_back(std::move(t));
    }
    // coefficients of degree < n_i may vanish only at the top; all-zero
    // polynomials would contradict minimality
    return make_sequence(K, std::move(terms));
}

FieldElement eval_exp_poly(const ExpPolySequence& seq, const mpz_class& n)
{
    if (n < 0) throw InvalidArgument("eval_exp_poly: negative index");
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 32)
        throw ResourceExhausted("eval_exp_poly: index " + n.get_str() + " too large for exact evaluation");
    const NumberField& K = seq.field;
    FieldElement sum = K.zero();
    const Rational nq(n);
    for (const auto& t : seq.terms) {
        FieldElement a = t.coeffs.back();
        for (std::size_t j = t.coeffs.size() - 1; j-- > 0;) a = nf_add(K, nf_scale(K, a, nq), t.coeffs[j]);
        if (a.is_zero()) continue;
        sum = nf_add(K, sum, nf_mul(K, a, nf_pow(K, t.root, n)));
    }
    return sum;
}

ModElement eval_exp_poly_mod(const ExpPolySequence& seq, const mpz_class& n, const mpz_class& q)
{
    if (!seq.integral_certified) throw InvalidArgument("eval_exp_poly_mod: sequence is not integral");
    if (n < 0) throw InvalidArgument("eval_exp_poly_mod: negative index");
    const NumberField& K = seq.field;
    mpz_class nmod;
    mpz_mod(nmod.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    ModElement sum = nf_reduce_mod(K, K.zero(), q);
    for (const auto& t : seq.terms) {
        ModElement a = nf_reduce_mod(K, t.coeffs.back(), q);
        for (std::size_t j = t.coeffs.size() - 1; j-- > 0;) {
            for (auto& c : a.coords) {
                c *= nmod;
                mpz_mod(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
            }
            a = nf_mod_add(K, a, nf_reduce_mod(K, t.coeffs[j], q));
        }
        if (a.is_zero()) continue;
        sum = nf_mod_add(K, sum, nf_mod_mul(K, a, nf_pow_mod(K, t.root, n, q)));
    }
    return sum;
}

AssociatedSimple associated_simple(const ExpPolySequence& seq)
{
    AssociatedSimple out{ExpPolySequence{seq.field, {}, seq.integral_certified}, false};
    for (const auto& t : seq.terms)
        if (!t.coeffs.front().is_zero()) out.sequence.terms.push_back(ExpTerm{t.root, {t.coeffs.front()}});
    out.sequence.validate();
    out.identically_zero = out.sequence.terms.empty();
    return out;
}

ScaledSequence scale_to_integral(const ExpPolySequence& seq)
{
    ScaledSequence out{seq, 1, 1};
    for (const auto& t : seq.terms) {
        mpz_lcm(out.root_scale.get_mpz_t(), out.root_scale.get_mpz_t(), t.root.denominator().get_mpz_t());
        for (const auto& c : t.coeffs)
            mpz_lcm(out.coefficient_multiplier.get_mpz_t(), out.coefficient_multiplier.get_mpz_t(),
                    c.denominator().get_mpz_t());
    }
    const NumberField& K = seq.field;
    for (auto& t : out.sequence.terms) {
        t.root = nf_scale(K, t.root, Rational(out.root_scale));
        for (auto& c : t.coeffs) c = nf_scale(K, c, Rational(out.coefficient_multiplier));
    }
    out.sequence.validate();
    if (!out.sequence.integral_certified) throw InternalConsistency("scale_to_integral: result not integral");
    return out;
}

} // namespace primezero
