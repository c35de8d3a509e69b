#ifndef PRIMEZERO_RESULTANT_HPP
#define PRIMEZERO_RESULTANT_HPP

#include "primezero/polynomial.hpp"

namespace primezero {

/// Res(P, Q) by the subresultant PRS. For monic P this is the product of
/// Q over the roots of P.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);

/// (-1)^(d(d-1)/2) Res(P, P') for monic P of degree d >= 2.
/// Throws DegenerateInput (value 0) when P has a repeated root.
mpz_class discriminant(const IntPolynomial& p);

} // namespace primezero

#endif
