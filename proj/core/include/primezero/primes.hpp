#ifndef PRIMEZERO_PRIMES_HPP
#define PRIMEZERO_PRIMES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace primezero {

/// Deterministic Miller-Rabin below 3.3e24, Baillie-PSW above.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n);

/// Primes up to and including bound, by sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// First m primes (2, 3, 5, ...).
std::vector<std::uint32_t> first_primes(unsigned m);

struct FactorEffort {
    std::uint32_t trial_bound = 1'000'000;
    /// Pollard-Brent iterations allowed per cofactor and polynomial constant.
    std::uint64_t rho_iterations = 1ULL << 22;
    unsigned rho_attempts = 16;
};

/// Prime factorization of |n| with multiplicity, ascending. Throws
/// InvalidArgument for n = 0 and PartialFactorization if the effort runs out.
std::vector<mpz_class> factor_integer(const mpz_class& n, const FactorEffort& effort = {});

/// Distinct primes of a factorization, ascending.
std::vector<mpz_class> distinct(std::vector<mpz_class> factors);

} // namespace primezero

#endif
