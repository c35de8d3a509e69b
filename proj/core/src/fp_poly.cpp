#include "primezero/fp_poly.hpp"

#include <algorithm>

#include "primezero/errors.hpp"
#include "primezero/primes.hpp"

namespace primezero {
namespace fp {

namespace {

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void reduce_coeff(mpz_class& c, const mpz_class& p) { mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t()); }

mpz_class inverse(const mpz_class& a, const mpz_class& p)
{
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw InvalidArgument("fp: element not invertible modulo p");
    return r;
}

} // namespace

Poly reduce(const IntPolynomial& f, const mpz_class& p)
{
    Poly r(f.coefficients().begin(), f.coefficients().end());
    for (auto& c : r) reduce_coeff(c, p);
    trim(r);
    return r;
}

IntPolynomial lift(const Poly& f) { return IntPolynomial(f); }

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, const mpz_class& p)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
        if (r[i] >= p) r[i] -= p;
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, const mpz_class& p)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
        if (r[i] < 0) r[i] += p;
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, const mpz_class& p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (auto& c : r) reduce_coeff(c, p);
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const mpz_class& p)
{
    if (b.empty()) throw InvalidArgument("fp::divmod: division by zero polynomial");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1);
    const mpz_class inv = inverse(b.back(), p);
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i] * inv;
        reduce_coeff(c, p);
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
            reduce_coeff(rem[i - db + j], p);
        }
    }
    trim(rem);
    trim(quot);
    return {quot, rem};
}

Poly mod(const Poly& a, const Poly& b, const mpz_class& p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, const mpz_class& p)
{
    if (a.empty()) return a;
    const mpz_class inv = inverse(a.back(), p);
    Poly r = a;
    for (auto& c : r) {
        c *= inv;
        reduce_coeff(c, p);
    }
    return r;
}

Poly gcd(Poly a, Poly b, const mpz_class& p)
{
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& a, const mpz_class& p)
{
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        r[i - 1] = a[i] * static_cast<unsigned long>(i);
        reduce_coeff(r[i - 1], p);
    }
    trim(r);
    return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, const mpz_class& p)
{
    if (e < 0) throw InvalidArgument("fp::powmod: negative exponent");
    Poly result = mod(Poly{mpz_class(1)}, m, p);
    Poly b = mod(base, m, p);
    const long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        result = mod(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = mod(mul(result, b, p), m, p);
    }
    return result;
}

namespace {

// g(x) with g(x)^p = f(x) for f with f' = 0; coefficients satisfy a^p = a.
Poly pth_root(const Poly& f, const mpz_class& p)
{
    const unsigned long pu = p.get_ui();
    Poly r;
    for (std::size_t i = 0; i < f.size(); i += pu) r.push_back(f[i]);
    trim(r);
    return r;
}

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

} // namespace

std::vector<std::pair<Poly, unsigned>> squarefree(const Poly& f, const mpz_class& p)
{
    std::vector<std::pair<Poly, unsigned>> out;
    if (degree(f) <= 0) return out;
    Poly c = gcd(f, derivative(f, p), p);
    Poly w = divmod(f, c, p).first;
    unsigned i = 1;
    while (!is_one(w) && !w.empty()) {
        Poly y = gcd(w, c, p);
        Poly z = divmod(w, y, p).first;
        if (degree(z) > 0) out.emplace_back(monic(z, p), i);
        ++i;
        w = std::move(y);
        c = divmod(c, w, p).first;
    }
    if (degree(c) > 0) {
        // c is a p-th power; only reachable when p <= deg f
        for (auto& [g, e] : squarefree(pth_root(c, p), p)) out.emplace_back(std::move(g), e * p.get_ui());
    }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> distinct_degree(const Poly& f, const mpz_class& p)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    Poly v = monic(f, p);
    const Poly x{mpz_class(0), mpz_class(1)};
    Poly w = mod(x, v, p);
    unsigned d = 0;
    while (degree(v) >= 2 * static_cast<int>(d + 1)) {
        ++d;
        w = powmod(w, p, v, p);
        Poly g = gcd(sub(w, x, p), v, p);
        if (degree(g) > 0) {
            out.emplace_back(d, static_cast<unsigned>(degree(g)) / d);
            v = divmod(v, g, p).first;
            w = mod(w, v, p);
        }
    }
    if (degree(v) > 0) out.emplace_back(static_cast<unsigned>(degree(v)), 1u);
    return out;
}

} // namespace fp

std::vector<FactorShape> factor_degrees_mod_p(const IntPolynomial& poly, const mpz_class& p)
{
    if (!is_prime(p)) throw InvalidArgument("factor_degrees_mod_p: modulus is not prime");
    if (!poly.is_monic() || poly.degree() < 1)
        throw InvalidArgument("factor_degrees_mod_p: polynomial must be monic of degree >= 1");
    const fp::Poly f = fp::reduce(poly, p);
    std::vector<FactorShape> shape;
    for (const auto& [g, e] : fp::squarefree(f, p))
        for (const auto& [deg, count] : fp::distinct_degree(g, p))
            for (unsigned i = 0; i < count; ++i) shape.push_back({deg, e});
    std::sort(shape.begin(), shape.end());
    return shape;
}

bool dedekind_p_maximal(const IntPolynomial& poly, const mpz_class& p)
{
    if (!is_prime(p)) throw InvalidArgument("dedekind_p_maximal: modulus is not prime");
    if (!poly.is_monic()) throw InvalidArgument("dedekind_p_maximal: polynomial must be monic");
    const fp::Poly f = fp::reduce(poly, p);
    // radical of f mod p: product of its distinct irreducible factors
    fp::Poly rad{mpz_class(1)};
    for (const auto& [g, e] : fp::squarefree(f, p)) rad = fp::mul(rad, g, p);
    const fp::Poly h = fp::divmod(f, rad, p).first;
    IntPolynomial gh = fp::lift(rad) * fp::lift(h);
    IntPolynomial diff = gh - poly;
    IntPolynomial F = exact_div(diff, p);
    fp::Poly Fbar = fp::reduce(F, p);
    fp::Poly common = fp::gcd(fp::gcd(Fbar, rad, p), h, p);
    return fp::degree(common) == 0;
}

} // namespace primezero
