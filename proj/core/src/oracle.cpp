#include <algorithm>
#include <tuple>

#include "primezero/errors.hpp"
#include "primezero/resultant.hpp"
#include "primezero/skolem.hpp"

namespace primezero {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Z[x]/(q, mu) with q below 2^63, kept separate from the library's
// bignum residue code so the oracle does not share its evaluation path.
class WordRing {
public:
    WordRing(const IntPolynomial& mu, u64 q) : q_(q), d_(static_cast<std::size_t>(mu.degree()))
    {
        for (std::size_t i = 0; i < d_; ++i) mu_.push_back(reduce(mu.coeff(i)));
    }

    u64 reduce(const mpz_class& a) const
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), q_);
        return r.get_ui();
    }

    std::vector<u64> element(const FieldElement& a) const
    {
        std::vector<u64> out;
        for (const auto& c : a.numerators()) out.push_back(reduce(c));
        return out;
    }

    std::vector<u64> one() const
    {
        std::vector<u64> r(d_, 0);
        r[0] = 1 % q_;
        return r;
    }

    u64 add(u64 a, u64 b) const
    {
        const u64 s = a + b;
        return s >= q_ ? s - q_ : s;
    }

    u64 mulw(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % q_); }

    std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const
    {
        std::vector<u64> r(2 * d_ - 1, 0);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) r[i + j] = add(r[i + j], mulw(a[i], b[j]));
        for (std::size_t i = r.size(); i-- > d_;) {
            const u64 c = r[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < d_; ++j) r[i - d_ + j] = add(r[i - d_ + j], q_ - mulw(c, mu_[j]));
        }
        r.resize(d_);
        return r;
    }

    std::vector<u64> pow(std::vector<u64> a, u64 e) const
    {
        std::vector<u64> r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    u64 modulus() const { return q_; }

private:
    u64 q_;
    std::size_t d_;
    std::vector<u64> mu_;
};

std::vector<unsigned long> sieve(unsigned long bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

// Smallest f with x^(p^f) = x in F_p[x]/(mu); the inertial degree when mu
// is squarefree mod p and all factors share one degree.
unsigned frobenius_order(const NumberField& K, unsigned long p)
{
    const std::size_t d = K.degree();
    if (d == 1) return 1;
    WordRing ring(K.defining_poly(), p);
    std::vector<u64> x(d, 0);
    x[1] = 1;
    std::vector<u64> t = x;
    for (unsigned f = 1; f <= d; ++f) {
        t = ring.pow(t, p);
        if (t == x) return f;
    }
    throw InternalConsistency("oracle: Frobenius order exceeds the degree");
}

FieldElement poly_at(const NumberField& K, const std::vector<FieldElement>& coeffs, const mpz_class& n)
{
    FieldElement a = K.zero();
    mpz_class np = 1;
    for (const auto& c : coeffs) {
        a = nf_add(K, a, nf_scale(K, c, Rational(np)));
        np *= n;
    }
    return a;
}

FieldElement v_value(const ExpPolySequence& seq, unsigned long n)
{
    const NumberField& K = seq.field;
    FieldElement s = K.zero();
    for (const auto& t : seq.terms) {
        FieldElement pw = K.one();
        for (unsigned long i = 0; i < n; ++i) pw = nf_mul(K, pw, t.root);
        s = nf_add(K, s, nf_mul(K, t.coeffs.front(), pw));
    }
    return s;
}

struct Index {
    mpz_class n;
    unsigned long ell;
    unsigned long k;
    mpz_class p;
};

mpz_class power(unsigned long p, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

class Scanner {
public:
    Scanner(const ExpPolySequence& seq, const OracleOptions& options) : seq_(seq), K_(seq.field), options_(options)
    {
        if (options.residue_filter && seq.integral_certified) {
            mpz_class q = mpz_class(1) << 61;
            for (int i = 0; i < 2; ++i) {
                mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
                filters_.emplace_back(K_.defining_poly(), q.get_ui());
            }
        }
    }

    bool is_zero(const mpz_class& n)
    {
        for (const auto& ring : filters_)
            if (!residue_zero(ring, n.get_ui())) return false;
        if (!filters_.empty()) return exact_value(n).is_zero();
        return incremental(n).is_zero();
    }

private:
    bool residue_zero(const WordRing& ring, u64 n) const
    {
        const u64 nq = n % ring.modulus();
        std::vector<u64> total(K_.degree(), 0);
        for (const auto& t : seq_.terms) {
            std::vector<u64> a(K_.degree(), 0);
            u64 np = 1;
            for (const auto& c : t.coeffs) {
                const auto ce = ring.element(c);
                for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.add(a[i], ring.mulw(ce[i], np));
                np = ring.mulw(np, nq);
            }
            const auto term = ring.mul(a, ring.pow(ring.element(t.root), n));
            for (std::size_t i = 0; i < total.size(); ++i) total[i] = ring.add(total[i], term[i]);
        }
        return std::all_of(total.begin(), total.end(), [](u64 c) { return c == 0; });
    }

    FieldElement exact_value(const mpz_class& n) const
    {
        FieldElement s = K_.zero();
        for (const auto& t : seq_.terms)
            s = nf_add(K_, s, nf_mul(K_, poly_at(K_, t.coeffs, n), nf_pow(K_, t.root, n)));
        return s;
    }

    // lambda_i^n from the previous index, one step of size n - last.
    FieldElement incremental(const mpz_class& n)
    {
        if (powers_.empty()) {
            for (std::size_t i = 0; i < seq_.terms.size(); ++i) powers_.push_back(K_.one());
            last_ = 0;
        }
        const mpz_class gap = n - last_;
        FieldElement s = K_.zero();
        for (std::size_t i = 0; i < seq_.terms.size(); ++i) {
            const auto& t = seq_.terms[i];
            if (gap != 0) powers_[i] = nf_mul(K_, powers_[i], nf_pow(K_, t.root, gap));
            s = nf_add(K_, s, nf_mul(K_, poly_at(K_, t.coeffs, n), powers_[i]));
        }
        last_ = n;
        return s;
    }

    const ExpPolySequence& seq_;
    const NumberField& K_;
    const OracleOptions& options_;
    std::vector<WordRing> filters_;
    std::vector<FieldElement> powers_;
    mpz_class last_;
};

} // namespace

std::optional<OracleHit> brute_force_oracle(const ExpPolySequence& seq, const FamilySpec& family, unsigned long p_max,
                                            const OracleOptions& options)
{
    family.validate();
    const NumberField& K = seq.field;
    const unsigned long c = family.c;

    bool all_constant_zero = true;
    for (const auto& t : seq.terms) all_constant_zero = all_constant_zero && t.coeffs.front().is_zero();
    if (all_constant_zero) return OracleHit{0, 0, 0, 0};

    const std::vector<unsigned long> primes = sieve(p_max);
    const unsigned long k_low = std::max<unsigned long>(1, family.min_k);
    std::vector<Index> indices;

    std::vector<unsigned long> ells;
    if (family.kind == Family::prime_power) {
        ells.push_back(1);
    } else if (family.kind != Family::sum) {
        for (unsigned long ell = 1; ell <= c; ++ell)
            if (!v_value(seq, ell).is_zero()) ells.push_back(ell);
    }

    std::vector<mpz_class> disc_primes;
    auto inertial_degree = [&](unsigned long p) -> unsigned {
        if (K.degree() == 1) return 1;
        if (disc_primes.empty()) disc_primes = ramified_candidates(K);
        if (std::find(disc_primes.begin(), disc_primes.end(), mpz_class(p)) == disc_primes.end())
            return frobenius_order(K, p);
        const SplittingData sd = splitting_data(K, p);
        if (sd.status != SplitStatus::certified)
            throw InvalidArgument("oracle: inertial degree of p = " + std::to_string(p) + " is not certified");
        return sd.f;
    };

    switch (family.kind) {
    case Family::prime_power:
    case Family::prime_power_multiple:
    case Family::inertial:
        for (unsigned long ell : ells) {
            if (family.min_k == 0) indices.push_back({ell, ell, 0, 0});
            for (unsigned long p : primes) {
                const unsigned f = family.kind == Family::inertial ? inertial_degree(p) : 1;
                for (unsigned long k = k_low; k <= c; ++k) indices.push_back({ell * power(p, k * f), ell, k, p});
            }
        }
        break;
    case Family::sum: {
        const unsigned long s1 = family.pattern_weight();
        if (v_value(seq, s1).is_zero()) return std::nullopt;
        const bool moving =
            std::any_of(family.pattern.begin(), family.pattern.end(), [](const SumPart& s) { return s.k > 0; });
        if (!moving) {
            indices.push_back({s1, s1, 0, 0});
            break;
        }
        for (unsigned long p : primes) {
            const unsigned f = inertial_degree(p);
            mpz_class n = 0;
            for (const auto& part : family.pattern) n += part.l * power(p, part.k * f);
            indices.push_back({n, s1, 0, p});
        }
        break;
    }
    }

    std::sort(indices.begin(), indices.end(), [](const Index& a, const Index& b) {
        return std::tie(a.n, a.ell, a.k, a.p) < std::tie(b.n, b.ell, b.k, b.p);
    });
    if (!indices.empty() && indices.back().n > options.max_index)
        throw ResourceExhausted("oracle: index " + indices.back().n.get_str() + " exceeds the evaluation budget " +
                                options.max_index.get_str());

    Scanner scanner(seq, options);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0 && indices[i].n == indices[i - 1].n) continue;
        if (scanner.is_zero(indices[i].n))
            return OracleHit{indices[i].n, indices[i].p, indices[i].ell, indices[i].k};
    }
    return std::nullopt;
}

} // namespace primezero
