#ifndef PRIMEZERO_FP_POLY_HPP
#define PRIMEZERO_FP_POLY_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "primezero/polynomial.hpp"

namespace primezero {

/// Polynomials over Z/pZ for prime p. Coefficients ascending, reduced to
/// [0, p), trailing zeros trimmed.
namespace fp {

using Poly = std::vector<mpz_class>;

Poly reduce(const IntPolynomial& f, const mpz_class& p);
IntPolynomial lift(const Poly& f);

int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, const mpz_class& p);
Poly sub(const Poly& a, const Poly& b, const mpz_class& p);
Poly mul(const Poly& a, const Poly& b, const mpz_class& p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const mpz_class& p);
Poly mod(const Poly& a, const Poly& b, const mpz_class& p);
Poly monic(const Poly& a, const mpz_class& p);
Poly gcd(Poly a, Poly b, const mpz_class& p);
Poly derivative(const Poly& a, const mpz_class& p);
/// base^e mod m.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, const mpz_class& p);

/// Squarefree decomposition f = prod g_i^i of a monic f.
std::vector<std::pair<Poly, unsigned>> squarefree(const Poly& f, const mpz_class& p);

/// Distinct-degree split of a monic squarefree f: (degree, number of factors).
std::vector<std::pair<unsigned, unsigned>> distinct_degree(const Poly& f, const mpz_class& p);

} // namespace fp

struct FactorShape {
    unsigned degree;
    unsigned multiplicity;
    friend bool operator==(const FactorShape&, const FactorShape&) = default;
    friend auto operator<=>(const FactorShape&, const FactorShape&) = default;
};

/// (deg g_i, e_i) for each distinct monic irreducible g_i with
/// P = prod g_i^e_i mod p, sorted ascending. P monic, degree >= 1.
std::vector<FactorShape> factor_degrees_mod_p(const IntPolynomial& poly, const mpz_class& p);

/// Dedekind's criterion: true iff p does not divide [O_K : Z[theta]]
/// for theta a root of the monic irreducible poly.
bool dedekind_p_maximal(const IntPolynomial& poly, const mpz_class& p);

} // namespace primezero

#endif
