#include "support.hpp"

#include <algorithm>
#include <map>

namespace testing_support {

mpz_class sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q)
{
    const int m = p.degree(), n = q.degree();
    const int size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<mpz_class>> a(size, std::vector<mpz_class>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = p.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = q.coeff(n - i);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < size; ++r)
                if (a[r][k] != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[size - 1][size - 1];
}

namespace {

using Poly = std::vector<long>;

long md(long a, long p) { return ((a % p) + p) % p; }

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p for monic g; returns quotient when remainder is zero.
bool divides(const Poly& f, const Poly& g, long p, Poly& quotient)
{
    Poly r = f;
    const std::size_t dg = g.size() - 1;
    if (r.size() < g.size()) return false;
    quotient.assign(r.size() - dg, 0);
    for (std::size_t i = r.size(); i-- > dg;) {
        const long c = r[i];
        quotient[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = md(r[i - dg + j] - c * g[j], p);
    }
    trim(r);
    return r.empty();
}

} // namespace

std::vector<std::pair<unsigned, unsigned>> brute_factor_shape(const IntPolynomial& f, unsigned long pu)
{
    const long p = static_cast<long>(pu);
    Poly cur;
    for (int i = 0; i <= f.degree(); ++i) cur.push_back(md(f.coeff(i).get_si(), p));
    trim(cur);
    std::map<std::vector<long>, unsigned> factors;
    for (unsigned deg = 1; 2 * deg <= cur.size() - 1 || deg == 1; ++deg) {
        if (cur.size() <= 1) break;
        // every monic polynomial of this degree, in counting order
        long total = 1;
        for (unsigned i = 0; i < deg; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            Poly g(deg + 1, 0);
            long c = code;
            for (unsigned i = 0; i < deg; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[deg] = 1;
            Poly q;
            while (cur.size() > 1 && divides(cur, g, p, q)) {
                ++factors[g];
                cur = q;
                trim(cur);
            }
        }
        if (2 * (deg + 1) > cur.size() - 1 && cur.size() > 1) break;
    }
    if (cur.size() > 1) ++factors[cur];
    std::vector<std::pair<unsigned, unsigned>> shape;
    for (const auto& [g, e] : factors) shape.emplace_back(static_cast<unsigned>(g.size() - 1), e);
    std::sort(shape.begin(), shape.end());
    return shape;
}

FieldElement naive_term(const ExpPolySequence& seq, unsigned long n)
{
    const NumberField& K = seq.field;
    FieldElement s = K.zero();
    for (const auto& t : seq.terms) {
        FieldElement pw = K.one();
        for (unsigned long i = 0; i < n; ++i) pw = primezero::nf_mul(K, pw, t.root);
        FieldElement a = K.zero();
        mpz_class np = 1;
        for (const auto& c : t.coeffs) {
            a = primezero::nf_add(K, a, primezero::nf_scale(K, c, Rational(np)));
            np *= n;
        }
        s = primezero::nf_add(K, s, primezero::nf_mul(K, a, pw));
    }
    return s;
}

} // namespace testing_support
