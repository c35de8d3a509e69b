#include "primezero/resultant.hpp"

#include <utility>

#include "primezero/errors.hpp"

namespace primezero {

namespace {

mpz_class pow(const mpz_class& b, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace

// Subresultant PRS (Collins / Brown), after Cohen, "A Course in
// Computational Algebraic Number Theory", algorithm 3.3.7.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.is_zero() || q.is_zero()) throw InvalidArgument("resultant: zero polynomial");

    const unsigned long dp = static_cast<unsigned long>(p.degree());
    const unsigned long dq = static_cast<unsigned long>(q.degree());
    if (dq == 0) return pow(q.leading(), dp);
    if (dp == 0) return pow(p.leading(), dq);

    const mpz_class a = p.content();
    const mpz_class b = q.content();
    IntPolynomial A = exact_div(p, a);
    IntPolynomial B = exact_div(q, b);
    mpz_class g = 1, h = 1;
    int s = 1;
    const mpz_class t = pow(a, dq) * pow(b, dp);

    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((dp & 1) && (dq & 1)) s = -1;
    }

    while (true) {
        const unsigned long da = static_cast<unsigned long>(A.degree());
        const unsigned long db = static_cast<unsigned long>(B.degree());
        const unsigned long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        IntPolynomial R = pseudo_remainder(A, B);
        if (R.is_zero()) return 0;
        A = std::move(B);
        B = exact_div(R, g * pow(h, delta));
        g = A.leading();
        // h <- h^(1 - delta) g^delta
        if (delta == 0) {
            // h unchanged
        } else {
            mpz_class num = pow(g, delta);
            mpz_class den = pow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() == 0) break;
    }

    const unsigned long da = static_cast<unsigned long>(A.degree());
    mpz_class num = pow(B.leading(), da);
    mpz_class den = pow(h, da - 1);
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * res;
}

mpz_class discriminant(const IntPolynomial& p)
{
    if (p.degree() < 2) throw InvalidArgument("discriminant: degree must be at least 2");
    if (!p.is_monic()) throw InvalidArgument("discriminant: polynomial must be monic");
    const unsigned long d = static_cast<unsigned long>(p.degree());
    mpz_class r = resultant(p, p.derivative());
    if ((d * (d - 1) / 2) & 1) r = -r;
    if (r == 0) throw DegenerateInput("discriminant: polynomial is not squarefree", 0);
    return r;
}

} // namespace primezero
