#include "primezero/primes.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "primezero/errors.hpp"

namespace primezero {

PartialFactorization::PartialFactorization(std::vector<mpz_class> primes, std::vector<mpz_class> cofactors)
    : std::runtime_error("integer factorization incomplete: composite cofactor left after effort budget"),
      primes_(std::move(primes)), cofactors_(std::move(cofactors))
{
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool mr_round(u64 n, u64 a, u64 d, unsigned s)
{
    a %= n;
    if (a == 0) return true;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<unsigned, 13> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool mr_round(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s)
{
    const mpz_class nm1 = n - 1;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& n)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class half_mod(mpz_class x, const mpz_class& n)
{
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return x;
}

// Strong Lucas probable prime test with Selfridge's parameters.
bool strong_lucas(const mpz_class& n)
{
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    long dd = 5;
    while (true) {
        mpz_class D = dd;
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && abs(D) != n) return false;
        dd = dd > 0 ? -(dd + 2) : -(dd - 2);
    }
    const mpz_class D = dd;
    const mpz_class P = 1;
    const mpz_class Q = (1 - D) / 4;

    mpz_class d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    mpz_class U = 1, V = P, Qk = mod_pos(Q, n);
    const mpz_class Dn = mod_pos(D, n);
    const mpz_class Qn = mod_pos(Q, n);
    const long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    for (long i = bits - 2; i >= 0; --i) {
        U = U * V % n;
        V = mod_pos(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            mpz_class U2 = half_mod(mod_pos(P * U + V, n), n);
            mpz_class V2 = half_mod(mod_pos(Dn * U + P * V, n), n);
            U = std::move(U2);
            V = std::move(V2);
            Qk = Qk * Qn % n;
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod_pos(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (V == 0) return true;
    }
    return false;
}

const mpz_class& mr_deterministic_limit()
{
    // 3317044064679887385961981: below it the first 13 prime bases suffice.
    static const mpz_class limit("3317044064679887385961981");
    return limit;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (unsigned p : kMrBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (!mr_round(n, a, d, s)) return false;
    return true;
}

bool is_prime(const mpz_class& n)
{
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
    for (unsigned p : kMrBases)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    if (n < mr_deterministic_limit()) {
        for (unsigned a : kMrBases)
            if (!mr_round(n, mpz_class(a), d, s)) return false;
        return true;
    }
    return mr_round(n, mpz_class(2), d, s) && strong_lucas(n);
}

mpz_class next_prime(const mpz_class& n)
{
    if (n < 2) return 2;
    mpz_class c = n + 1;
    if (mpz_even_p(c.get_mpz_t()) && c != 2) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound)
{
    std::vector<std::uint32_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::uint32_t> first_primes(unsigned m)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 2; out.size() < m; ++c)
        if (is_prime(static_cast<std::uint64_t>(c))) out.push_back(c);
    return out;
}

namespace {

const std::vector<std::uint32_t>& trial_primes(std::uint32_t bound)
{
    static std::mutex mu;
    static std::uint32_t cached_bound = 0;
    static std::vector<std::uint32_t> cached;
    std::lock_guard lock(mu);
    if (bound > cached_bound) {
        cached = primes_up_to(bound);
        cached_bound = bound;
    }
    return cached;
}

u64 gcd64(u64 a, u64 b)
{
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
u64 brent64(u64 n, u64 c, u64 budget)
{
    const u64 m = 128;
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1, r = 1, used = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        do {
            ys = y;
            const u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = gcd64(q, n);
            k += lim;
            used += lim;
        } while (k < r && g == 1);
        r <<= 1;
        if (used > budget) return 0;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

mpz_class brent(const mpz_class& n, unsigned long c, std::uint64_t budget)
{
    const unsigned long m = 128;
    mpz_class y = 2, x = 2, ys = 2, q = 1, g = 1, t;
    std::uint64_t r = 1, used = 0;
    auto f = [&](mpz_class& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) f(y);
        std::uint64_t k = 0;
        do {
            ys = y;
            const std::uint64_t lim = std::min<std::uint64_t>(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                f(y);
                t = x - y;
                q = q * t;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            used += lim;
        } while (k < r && g == 1);
        r <<= 1;
        if (used > budget) return 0;
    } while (g == 1);
    if (g == n) {
        do {
            f(ys);
            t = x - ys;
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? mpz_class(0) : g;
}

mpz_class find_factor(const mpz_class& n, const FactorEffort& effort)
{
    // perfect powers defeat rho
    for (unsigned long k = 2; k <= 64; ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) return root;
        if (root < 2) break;
    }
    for (unsigned attempt = 0; attempt < effort.rho_attempts; ++attempt) {
        const unsigned long c = 1 + 2 * attempt;
        if (mpz_fits_ulong_p(n.get_mpz_t()) && n.get_ui() < (1ULL << 63)) {
            u64 g = brent64(n.get_ui(), c, effort.rho_iterations);
            if (g) return mpz_class(static_cast<unsigned long>(g));
        } else {
            mpz_class g = brent(n, c, effort.rho_iterations);
            if (g != 0) return g;
        }
    }
    return 0;
}

} // namespace

std::vector<mpz_class> factor_integer(const mpz_class& n, const FactorEffort& effort)
{
    if (n == 0) throw InvalidArgument("factor_integer: zero has no factorization");
    mpz_class rest = abs(n);
    std::vector<mpz_class> primes;
    for (std::uint32_t p : trial_primes(effort.trial_bound)) {
        if (rest == 1) break;
        if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) {
            break;
        }
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            primes.emplace_back(static_cast<unsigned long>(p));
        }
    }
    std::vector<mpz_class> pending;
    if (rest != 1) pending.push_back(rest);
    std::vector<mpz_class> stuck;
    while (!pending.empty()) {
        mpz_class m = std::move(pending.back());
        pending.pop_back();
        if (is_prime(m)) {
            primes.push_back(std::move(m));
            continue;
        }
        mpz_class d = find_factor(m, effort);
        if (d == 0) {
            stuck.push_back(std::move(m));
            continue;
        }
        mpz_class other;
        mpz_divexact(other.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        // a perfect-power root divides m with multiplicity
        pending.push_back(std::move(d));
        pending.push_back(std::move(other));
    }
    std::sort(primes.begin(), primes.end());
    if (!stuck.empty()) {
        std::sort(stuck.begin(), stuck.end());
        throw PartialFactorization(std::move(primes), std::move(stuck));
    }
    return primes;
}

std::vector<mpz_class> distinct(std::vector<mpz_class> factors)
{
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return factors;
}

} // namespace primezero
