#include "primezero/polynomial.hpp"

#include <sstream>

#include "primezero/errors.hpp"

namespace primezero {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, unsigned k)
{
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const
{
    if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpz_class IntPolynomial::content() const
{
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c)
{
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string IntPolynomial::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

IntDivision divide_by_monic(const IntPolynomial& a, const IntPolynomial& monic)
{
    if (!monic.is_monic()) throw InvalidArgument("divide_by_monic: divisor is not monic");
    const int db = monic.degree();
    if (a.degree() < db) return {IntPolynomial{}, a};
    std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const mpz_class c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                       monic.coefficients()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) throw InvalidArgument("pseudo_remainder: zero divisor");
    const int db = b.degree();
    if (a.degree() < db) return a;
    std::vector<mpz_class> r(a.coefficients().begin(), a.coefficients().end());
    const mpz_class& lb = b.leading();
    int e = a.degree() - db + 1;
    for (int i = a.degree(); i >= db; --i) {
        const mpz_class c = r[static_cast<std::size_t>(i)];
        for (auto& x : r) x *= lb;
        --e;
        if (c != 0) {
            for (int j = 0; j <= db; ++j)
                mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                           b.coefficients()[static_cast<std::size_t>(j)].get_mpz_t());
        }
        r.pop_back();
    }
    IntPolynomial out(std::move(r));
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        out *= f;
    }
    return out;
}

IntPolynomial exact_div(const IntPolynomial& a, const mpz_class& c)
{
    if (c == 0) throw InvalidArgument("exact_div: division by zero");
    std::vector<mpz_class> r(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : r) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw InternalConsistency("exact_div: inexact coefficient division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return IntPolynomial(std::move(r));
}

namespace {

int mobius(unsigned n)
{
    int mu = 1;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace

IntPolynomial cyclotomic(unsigned n)
{
    if (n == 0) throw InvalidArgument("cyclotomic: n must be positive");
    // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
    IntPolynomial num{1}, den{1};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        IntPolynomial f = IntPolynomial::monomial(1, d) - IntPolynomial{1};
        if (mu > 0)
            num = num * f;
        else
            den = den * f;
    }
    // den is a product of monic polynomials; normalize sign so it is monic
    if (den.leading() < 0) {
        den = -den;
        num = -num;
    }
    IntDivision q = divide_by_monic(num, den);
    if (!q.remainder.is_zero()) throw InternalConsistency("cyclotomic: inexact division");
    return q.quotient;
}

} // namespace primezero
