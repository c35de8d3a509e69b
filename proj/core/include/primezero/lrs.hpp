#ifndef PRIMEZERO_LRS_HPP
#define PRIMEZERO_LRS_HPP

#include <vector>

#include <gmpxx.h>

#include "primezero/number_field.hpp"

namespace primezero {

/// u_n = a_1 u_{n-1} + ... + a_l u_{n-l} with rational data. Order 0 is
/// the identically zero sequence.
struct RecurrenceSpec {
    std::vector<Rational> coeffs;  ///< a_1 .. a_l, a_l != 0
    std::vector<Rational> initial; ///< u_0 .. u_{l-1}

    std::size_t order() const { return coeffs.size(); }
    bool is_zero_sequence() const { return coeffs.empty(); }
    /// Throws InvalidArgument when lengths disagree or a_l = 0.
    void validate() const;

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// x^l - a_1 x^(l-1) - ... - a_l, ascending.
std::vector<Rational> characteristic_polynomial(const RecurrenceSpec& spec);

Rational eval_recurrence(const RecurrenceSpec& spec, const mpz_class& n);
Rational eval_recurrence(const RecurrenceSpec& spec, unsigned long n);

/// Unrolls the recurrence: u_0 .. u_{count-1}.
std::vector<Rational> recurrence_terms(const RecurrenceSpec& spec, std::size_t count);

/// Minimal-order recurrence of the sequence via the Hankel rank profile.
RecurrenceSpec minimal_recurrence(const RecurrenceSpec& spec);

/// One term A(n) lambda^n; coeffs is A in ascending powers of n.
struct ExpTerm {
    FieldElement root;
    std::vector<FieldElement> coeffs;
    friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// u_n = sum_i A_i(n) lambda_i^n over a number field.
struct ExpPolySequence {
    NumberField field;
    std::vector<ExpTerm> terms;
    bool integral_certified = false;

    /// Checks membership, distinct roots and nonzero coefficient polynomials,
    /// and recomputes integral_certified.
    void validate();
    bool is_simple() const;
    /// Every coefficient polynomial has rational coefficients.
    bool has_rational_coefficients() const;
};

/// Builds a sequence, trimming trailing zero coefficients and recording
/// whether all data lies in Z[theta].
ExpPolySequence make_sequence(NumberField field, std::vector<ExpTerm> terms);

struct RootMultiplicity {
    FieldElement root;
    unsigned multiplicity;
};

/// Exponential-polynomial form from supplied roots of the minimal
/// characteristic polynomial. Throws InvalidRoots if the roots do not match.
ExpPolySequence to_exp_poly(const RecurrenceSpec& spec, const NumberField& K, const std::vector<RootMultiplicity>& roots);

/// Exact u_n. Throws ResourceExhausted for n beyond 2^32.
FieldElement eval_exp_poly(const ExpPolySequence& seq, const mpz_class& n);

/// u_n in Z[x]/(q, mu); needs integral_certified.
ModElement eval_exp_poly_mod(const ExpPolySequence& seq, const mpz_class& n, const mpz_class& q);

struct AssociatedSimple {
    ExpPolySequence sequence; ///< v_n = sum A_i(0) lambda_i^n, zero terms dropped
    bool identically_zero = false;
};

AssociatedSimple associated_simple(const ExpPolySequence& seq);

struct ScaledSequence {
    ExpPolySequence sequence;          ///< w_n = C q^n u_n, integral_certified
    mpz_class root_scale = 1;          ///< q
    mpz_class coefficient_multiplier = 1; ///< C
};

ScaledSequence scale_to_integral(const ExpPolySequence& seq);

} // namespace primezero

#endif
