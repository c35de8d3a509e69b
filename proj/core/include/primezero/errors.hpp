#ifndef PRIMEZERO_ERRORS_HPP
#define PRIMEZERO_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace primezero {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well-formed but degenerate, e.g. a discriminant of zero.
class DegenerateInput : public std::domain_error {
public:
    DegenerateInput(const std::string& what, mpz_class value)
        : std::domain_error(what), value_(std::move(value)) {}
    const mpz_class& value() const { return value_; }

private:
    mpz_class value_;
};

/// Raised when the factoring budget runs out before every cofactor is prime.
/// Carries the primes that were found and the composite cofactors left over.
class PartialFactorization : public std::runtime_error {
public:
    PartialFactorization(std::vector<mpz_class> primes, std::vector<mpz_class> cofactors);
    const std::vector<mpz_class>& primes() const { return primes_; }
    const std::vector<mpz_class>& cofactors() const { return cofactors_; }

private:
    std::vector<mpz_class> primes_;
    std::vector<mpz_class> cofactors_;
};

class NotGalois : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRoots : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalConsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace primezero

#endif
