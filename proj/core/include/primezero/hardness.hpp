#ifndef PRIMEZERO_HARDNESS_HPP
#define PRIMEZERO_HARDNESS_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "primezero/lrs.hpp"
#include "primezero/number_field.hpp"
#include "primezero/polynomial.hpp"

namespace primezero {

/// zero_phase selectors use the first m primes and fire at n = 0 mod p_k;
/// one_phase selectors use the first m odd primes and fire at n = 1 mod p_k.
enum class SelectorVariant { zero_phase, one_phase };

struct SubsetSumInstance {
    std::vector<mpz_class> a;
    mpz_class b;
    void validate() const;
};

/// p_k for k = 1, 2, ...
unsigned long selector_modulus(unsigned k, SelectorVariant variant);
std::vector<unsigned long> selector_moduli(unsigned m, SelectorVariant variant);

/// 0/1 value of the k-th selector at n.
int selector_value(unsigned k, SelectorVariant variant, const mpz_class& n);

/// u_n = u_{n - p_k} with the initial block of the variant.
RecurrenceSpec selector_sequence(unsigned k, SelectorVariant variant);

/// b - sum_k a_k selector_k(n), straight from the definition.
mpz_class reduction_term(const SubsetSumInstance& instance, SelectorVariant variant, const mpz_class& n);

/// (x - 1)^2 prod_k Phi_{p_k}, the lcm of (x^{p_1} - 1)(x - 1) and the x^{p_k} - 1.
IntPolynomial reduction_charpoly(unsigned m, SelectorVariant variant);

/// Homogeneous recurrence for n -> b - sum_k a_k selector_k(n).
RecurrenceSpec reduce_to_lrs(const SubsetSumInstance& instance, SelectorVariant variant);

/// Lexicographically first S (1-based, ascending) with sum_{k in S} a_k = b.
/// Throws ResourceExhausted for m > 30.
std::optional<std::vector<unsigned>> subset_sum_bruteforce(const SubsetSumInstance& instance);

struct Congruence {
    mpz_class r;
    mpz_class modulus;
};

/// Solves r = r_k mod p_k by CRT, then returns the first prime in
/// r, r + P, r + 2P, ... Throws InvalidArgument for non-coprime moduli or
/// gcd(r, P) > 1 and ResourceExhausted after 10^6 steps.
mpz_class prime_in_progression(const std::vector<Congruence>& system);

/// The one_phase system for a subset: 1 mod p_k for k in S, 2 otherwise.
std::vector<Congruence> prime_residue_system(const std::vector<unsigned>& subset, unsigned m);

/// prod_{k in S} p_k, the zero of the zero_phase sequence for S.
mpz_class zero_phase_index(const std::vector<unsigned>& subset);

/// Smallest prime p <= bound with u_p = 0, unrolling an integer recurrence.
std::optional<unsigned long> first_prime_zero(const RecurrenceSpec& spec, unsigned long bound);

/// Q(zeta_P) for P = prod p_k, presented by Phi_P.
NumberField reduction_field(unsigned m, SelectorVariant variant);

/// Roots of the minimal characteristic polynomial of spec inside
/// reduction_field, each zeta_P^j reduced mod Phi_P.
std::vector<RootMultiplicity> reduction_roots(const RecurrenceSpec& spec, unsigned m, SelectorVariant variant);

} // namespace primezero

#endif
