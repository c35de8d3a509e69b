#include "primezero/hardness.hpp"

#include <algorithm>
#include <functional>

#include "primezero/errors.hpp"
#include "primezero/primes.hpp"

namespace primezero {

void SubsetSumInstance::validate() const
{
    if (a.empty()) throw InvalidArgument("subset sum instance needs at least one element");
}

unsigned long selector_modulus(unsigned k, SelectorVariant variant)
{
    if (k == 0) throw InvalidArgument("selector index starts at 1");
    const auto primes = first_primes(variant == SelectorVariant::zero_phase ? k : k + 1);
    return primes.back();
}

std::vector<unsigned long> selector_moduli(unsigned m, SelectorVariant variant)
{
    const auto primes = first_primes(variant == SelectorVariant::zero_phase ? m : m + 1);
    std::vector<unsigned long> out(primes.begin() + (variant == SelectorVariant::zero_phase ? 0 : 1), primes.end());
    return out;
}

namespace {

unsigned long phase(SelectorVariant v) { return v == SelectorVariant::zero_phase ? 0 : 1; }

int fires(unsigned long p, SelectorVariant v, const mpz_class& n)
{
    return mpz_fdiv_ui(n.get_mpz_t(), p) == phase(v) ? 1 : 0;
}

} // namespace

int selector_value(unsigned k, SelectorVariant variant, const mpz_class& n)
{
    if (n < 0) throw InvalidArgument("selector_value: negative index");
    return fires(selector_modulus(k, variant), variant, n);
}

RecurrenceSpec selector_sequence(unsigned k, SelectorVariant variant)
{
    const unsigned long p = selector_modulus(k, variant);
    RecurrenceSpec spec;
    spec.coeffs.assign(p, 0);
    spec.coeffs.back() = 1;
    spec.initial.assign(p, 0);
    spec.initial[phase(variant)] = 1;
    return spec;
}

mpz_class reduction_term(const SubsetSumInstance& instance, SelectorVariant variant, const mpz_class& n)
{
    instance.validate();
    const auto moduli = selector_moduli(static_cast<unsigned>(instance.a.size()), variant);
    mpz_class t = instance.b;
    for (std::size_t k = 0; k < moduli.size(); ++k)
        if (fires(moduli[k], variant, n)) t -= instance.a[k];
    return t;
}

IntPolynomial reduction_charpoly(unsigned m, SelectorVariant variant)
{
    IntPolynomial poly{1, -2, 1};
    for (unsigned long p : selector_moduli(m, variant)) poly = poly * cyclotomic(static_cast<unsigned>(p));
    return poly;
}

RecurrenceSpec reduce_to_lrs(const SubsetSumInstance& instance, SelectorVariant variant)
{
    instance.validate();
    const IntPolynomial chi = reduction_charpoly(static_cast<unsigned>(instance.a.size()), variant);
    const std::size_t L = static_cast<std::size_t>(chi.degree());
    RecurrenceSpec spec;
    for (std::size_t j = 1; j <= L; ++j) spec.coeffs.emplace_back(-chi.coeff(L - j));
    for (std::size_t n = 0; n < L; ++n) spec.initial.emplace_back(reduction_term(instance, variant, n));
    return spec;
}

std::optional<std::vector<unsigned>> subset_sum_bruteforce(const SubsetSumInstance& instance)
{
    instance.validate();
    const unsigned m = static_cast<unsigned>(instance.a.size());
    if (m > 30) throw ResourceExhausted("subset_sum_bruteforce: m = " + std::to_string(m) + " exceeds 30");
    std::vector<unsigned> chosen;
    // depth-first in lexicographic order: {}, {1}, {1,2}, ..., {1,3}, ...
    std::function<bool(unsigned, const mpz_class&)> search = [&](unsigned next, const mpz_class& sum) {
        if (sum == instance.b) return true;
        for (unsigned k = next; k < m; ++k) {
            chosen.push_back(k + 1);
            if (search(k + 1, sum + instance.a[k])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(0, 0)) return chosen;
    return std::nullopt;
}

mpz_class prime_in_progression(const std::vector<Congruence>& system)
{
    if (system.empty()) throw InvalidArgument("prime_in_progression: empty congruence system");
    mpz_class r = 0, P = 1;
    for (const auto& c : system) {
        if (c.modulus < 2) throw InvalidArgument("prime_in_progression: moduli must exceed 1");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), c.modulus.get_mpz_t());
        if (g != 1) throw InvalidArgument("prime_in_progression: moduli are not pairwise coprime");
        // r + P t = c.r mod c.modulus
        mpz_class inv, t;
        mpz_invert(inv.get_mpz_t(), P.get_mpz_t(), c.modulus.get_mpz_t());
        t = (c.r - r) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), c.modulus.get_mpz_t());
        r += P * t;
        P *= c.modulus;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
    if (g != 1) throw InvalidArgument("prime_in_progression: residue " + r.get_str() + " shares a factor with " + P.get_str());
    constexpr unsigned long kCap = 1'000'000;
    for (unsigned long step = 0; step < kCap; ++step, r += P)
        if (is_prime(r)) return r;
    throw ResourceExhausted("prime_in_progression: no prime within 10^6 steps of the progression");
}

std::vector<Congruence> prime_residue_system(const std::vector<unsigned>& subset, unsigned m)
{
    std::vector<Congruence> out;
    const auto moduli = selector_moduli(m, SelectorVariant::one_phase);
    for (unsigned k = 1; k <= m; ++k) {
        const bool in = std::find(subset.begin(), subset.end(), k) != subset.end();
        out.push_back({in ? 1 : 2, moduli[k - 1]});
    }
    return out;
}

mpz_class zero_phase_index(const std::vector<unsigned>& subset)
{
    mpz_class n = 1;
    for (unsigned k : subset) n *= selector_modulus(k, SelectorVariant::zero_phase);
    return n;
}

std::optional<unsigned long> first_prime_zero(const RecurrenceSpec& spec, unsigned long bound)
{
    spec.validate();
    const std::size_t L = spec.order();
    std::vector<mpz_class> a, u;
    for (const auto& c : spec.coeffs) {
        if (c.get_den() != 1) throw InvalidArgument("first_prime_zero: recurrence must have integer data");
        a.push_back(c.get_num());
    }
    for (const auto& c : spec.initial) {
        if (c.get_den() != 1) throw InvalidArgument("first_prime_zero: recurrence must have integer data");
        u.push_back(c.get_num());
    }
    if (bound > 0xffffffffUL) throw ResourceExhausted("first_prime_zero: bound too large");
    const auto primes = primes_up_to(static_cast<std::uint32_t>(bound));
    if (L == 0) {
        if (primes.empty()) return std::nullopt;
        return primes.front();
    }
    // ring buffer over the last L terms
    std::vector<mpz_class> window(u.begin(), u.end());
    std::size_t next_prime_index = 0;
    mpz_class s;
    for (unsigned long n = 0; n <= bound && next_prime_index < primes.size(); ++n) {
        const mpz_class& value = window[n % L];
        if (n >= L) {
            s = 0;
            for (std::size_t j = 1; j <= L; ++j) s += a[j - 1] * window[(n - j) % L];
            window[n % L] = s;
        }
        if (primes[next_prime_index] == n) {
            if (value == 0) return n;
            ++next_prime_index;
        }
    }
    return std::nullopt;
}

NumberField reduction_field(unsigned m, SelectorVariant variant)
{
    unsigned long P = 1;
    for (unsigned long p : selector_moduli(m, variant)) P *= p;
    return NumberField(cyclotomic(static_cast<unsigned>(P)), true);
}

std::vector<RootMultiplicity> reduction_roots(const RecurrenceSpec& spec, unsigned m, SelectorVariant variant)
{
    const RecurrenceSpec minimal = minimal_recurrence(spec);
    std::vector<mpz_class> coeffs;
    for (const auto& c : characteristic_polynomial(minimal)) {
        if (c.get_den() != 1) throw InvalidArgument("reduction_roots: minimal polynomial is not integral");
        coeffs.push_back(c.get_num());
    }
    IntPolynomial chi(std::move(coeffs));
    const NumberField K = reduction_field(m, variant);
    const auto moduli = selector_moduli(m, variant);
    unsigned long P = 1;
    for (unsigned long p : moduli) P *= p;

    std::vector<RootMultiplicity> roots;
    unsigned mult = 0;
    const IntPolynomial linear{-1, 1};
    while (chi.degree() > 0) {
        const IntDivision qr = divide_by_monic(chi, linear);
        if (!qr.remainder.is_zero()) break;
        chi = qr.quotient;
        ++mult;
    }
    if (mult > 0) roots.push_back({K.one(), mult});

    auto zeta_power = [&](unsigned long e) {
        const IntDivision qr = divide_by_monic(IntPolynomial::monomial(1, static_cast<unsigned>(e)), K.defining_poly());
        std::vector<Rational> c(K.degree());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = qr.remainder.coeff(i);
        return K.element(c);
    };
    for (unsigned long p : moduli) {
        const IntPolynomial phi = cyclotomic(static_cast<unsigned>(p));
        const IntDivision qr = divide_by_monic(chi, phi);
        if (!qr.remainder.is_zero()) continue;
        chi = qr.quotient;
        for (unsigned long j = 1; j < p; ++j) roots.push_back({zeta_power((P / p) * j), 1});
    }
    if (chi.degree() != 0) throw InternalConsistency("reduction_roots: minimal polynomial has unexpected factors");
    return roots;
}

} // namespace primezero
