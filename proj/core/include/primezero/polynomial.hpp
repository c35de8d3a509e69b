#ifndef PRIMEZERO_POLYNOMIAL_HPP
#define PRIMEZERO_POLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace primezero {

using Rational = mpq_class;

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    /// c * x^k
    static IntPolynomial monomial(const mpz_class& c, unsigned k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of x^i; zero past the degree.
    mpz_class coeff(std::size_t i) const;
    const mpz_class& leading() const;
    std::span<const mpz_class> coefficients() const { return coeffs_; }

    mpz_class content() const;
    IntPolynomial derivative() const;
    mpz_class evaluate(const mpz_class& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const mpz_class& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Quotient and remainder of a by a monic divisor; exact over Z.
struct IntDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};
IntDivision divide_by_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Divides every coefficient by c; throws if any division is inexact.
IntPolynomial exact_div(const IntPolynomial& a, const mpz_class& c);

/// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned n);

} // namespace primezero

#endif
