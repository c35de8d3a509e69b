#ifndef PRIMEZERO_TEST_SUPPORT_HPP
#define PRIMEZERO_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "primezero/lrs.hpp"
#include "primezero/number_field.hpp"
#include "primezero/polynomial.hpp"

namespace testing_support {

using primezero::ExpPolySequence;
using primezero::ExpTerm;
using primezero::FieldElement;
using primezero::IntPolynomial;
using primezero::NumberField;
using primezero::Rational;

inline Rational frac(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
    }

    Rational rational(long num_bound, long den_max)
    {
        const long num = uniform(-num_bound, num_bound);
        return frac(num, uniform(1, den_max));
    }

    FieldElement element(const NumberField& K, long bound)
    {
        std::vector<mpz_class> c;
        for (std::size_t i = 0; i < K.degree(); ++i) c.emplace_back(uniform(-bound, bound));
        return FieldElement(std::move(c), 1);
    }

    FieldElement nonzero_element(const NumberField& K, long bound)
    {
        for (;;) {
            FieldElement a = element(K, bound);
            if (!a.is_zero()) return a;
        }
    }

    IntPolynomial poly(int degree, long bound)
    {
        std::vector<mpz_class> c;
        for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(-bound, bound));
        return IntPolynomial(std::move(c));
    }

    IntPolynomial monic(int degree, long bound)
    {
        std::vector<mpz_class> c;
        for (int i = 0; i < degree; ++i) c.emplace_back(uniform(-bound, bound));
        c.emplace_back(1);
        return IntPolynomial(std::move(c));
    }

    /// Integral sequence with m <= max_terms distinct roots, coefficient
    /// polynomials of degree <= max_deg. rational_coeffs keeps A_i in Z[x].
    /// Roots of unity and small integers are favoured so zeros actually occur.
    ExpPolySequence sequence(const NumberField& K, int max_terms, int max_deg, long bound, bool rational_coeffs)
    {
        const int m = static_cast<int>(uniform(1, max_terms));
        std::vector<ExpTerm> terms;
        while (static_cast<int>(terms.size()) < m) {
            FieldElement root = coin(0.4) ? K.from_rational(pick(std::vector<long>{1, -1, 2, -2, 3}))
                                          : nonzero_element(K, bound);
            bool fresh = true;
            for (const auto& t : terms) fresh = fresh && !(t.root == root);
            if (!fresh) continue;
            const int deg = static_cast<int>(uniform(0, max_deg));
            ExpTerm t{root, {}};
            for (int j = 0; j <= deg; ++j)
                t.coeffs.push_back(rational_coeffs ? K.from_rational(uniform(-bound, bound)) : element(K, bound));
            while (!t.coeffs.empty() && t.coeffs.back().is_zero()) t.coeffs.pop_back();
            if (t.coeffs.empty()) t.coeffs.push_back(K.one());
            terms.push_back(std::move(t));
        }
        return primezero::make_sequence(K, std::move(terms));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline NumberField gaussian() { return NumberField(IntPolynomial{1, 0, 1}, true); }
inline NumberField sqrt2() { return NumberField(IntPolynomial{-2, 0, 1}, true); }
inline NumberField zeta5() { return NumberField(IntPolynomial{1, 1, 1, 1, 1}, true); }

/// lambda_1^n + conj + 3 (lambda_2^n + conj) + 1 over Q(i) with
/// lambda_1 = 39 + 52i and lambda_2 = -60 + 25i.
inline ExpPolySequence example1()
{
    const NumberField K = gaussian();
    std::vector<ExpTerm> t;
    t.push_back({K.element({39, 52}), {K.one()}});
    t.push_back({K.element({39, -52}), {K.one()}});
    t.push_back({K.element({-60, 25}), {K.from_rational(3)}});
    t.push_back({K.element({-60, -25}), {K.from_rational(3)}});
    t.push_back({K.one(), {K.one()}});
    return primezero::make_sequence(K, std::move(t));
}

/// base^n - c over Q.
inline ExpPolySequence power_minus(long base, long c)
{
    const NumberField Q = NumberField::rationals();
    std::vector<ExpTerm> t;
    t.push_back({Q.from_rational(base), {Q.one()}});
    t.push_back({Q.one(), {Q.from_rational(-c)}});
    return primezero::make_sequence(Q, std::move(t));
}

/// Sylvester-matrix determinant by Bareiss elimination.
mpz_class sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Complete factorization shape mod a small prime by trial division with
/// every monic polynomial of degree <= deg/2.
std::vector<std::pair<unsigned, unsigned>> brute_factor_shape(const IntPolynomial& f, unsigned long p);

/// u_n from the definition, exact, one multiplication at a time.
FieldElement naive_term(const ExpPolySequence& seq, unsigned long n);

} // namespace testing_support

#endif
