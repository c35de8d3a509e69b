#ifndef PRIMEZERO_NUMBER_FIELD_HPP
#define PRIMEZERO_NUMBER_FIELD_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primezero/fp_poly.hpp"
#include "primezero/polynomial.hpp"
#include "primezero/primes.hpp"

namespace primezero {

/// Element of K = Q(theta) in the power basis 1, theta, ..., theta^(d-1).
/// Stored as integer numerators over one positive common denominator,
/// kept in lowest terms.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(std::vector<mpz_class> numerators, mpz_class denominator);
    static FieldElement from_rationals(std::span<const Rational> coords);
    static FieldElement rational(std::size_t degree, const Rational& value);

    std::size_t size() const { return num_.size(); }
    Rational coord(std::size_t i) const;
    std::vector<Rational> coords() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    /// Integer power-basis coordinates, hence an element of Z[theta].
    bool is_integral() const { return den_ == 1; }
    /// Only the constant coordinate may be nonzero.
    bool is_rational() const;

    FieldElement operator-() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend std::weak_ordering operator<=>(const FieldElement&, const FieldElement&) = default;

    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

/// Number field presented by a monic irreducible integer polynomial.
class NumberField {
public:
    NumberField(IntPolynomial defining_poly, bool galois_claimed);
    /// Q itself, presented by x.
    static NumberField rationals();

    const IntPolynomial& defining_poly() const { return poly_; }
    std::size_t degree() const { return degree_; }
    bool galois_claimed() const { return galois_; }

    FieldElement zero() const { return FieldElement::rational(degree_, 0); }
    FieldElement one() const { return FieldElement::rational(degree_, 1); }
    FieldElement from_rational(const Rational& q) const { return FieldElement::rational(degree_, q); }
    FieldElement element(std::span<const Rational> coords) const;
    FieldElement element(std::initializer_list<long> coords) const;
    bool contains(const FieldElement& a) const { return a.size() == degree_; }

    /// Reduces an integer coefficient vector of length <= 2d-1 modulo the
    /// defining polynomial in place, leaving d entries.
    void reduce(std::vector<mpz_class>& coeffs) const;

    friend bool operator==(const NumberField& a, const NumberField& b)
    {
        return a.poly_ == b.poly_ && a.galois_ == b.galois_;
    }

private:
    IntPolynomial poly_;
    std::size_t degree_;
    bool galois_;
};

FieldElement nf_add(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement nf_sub(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement nf_mul(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement nf_scale(const NumberField& K, const FieldElement& a, const Rational& c);
FieldElement nf_pow(const NumberField& K, const FieldElement& a, const mpz_class& n);
FieldElement nf_pow(const NumberField& K, const FieldElement& a, unsigned long n);
FieldElement nf_inverse(const NumberField& K, const FieldElement& a);

/// Norm of a as Res(defining_poly, rep(a)).
Rational nf_norm(const NumberField& K, const FieldElement& a);

/// Characteristic polynomial of multiplication by a, monic, ascending.
std::vector<Rational> nf_charpoly(const NumberField& K, const FieldElement& a);

/// True when the characteristic polynomial has integer coefficients,
/// i.e. a lies in the ring of integers.
bool nf_is_algebraic_integer(const NumberField& K, const FieldElement& a);

/// Image of an integral element in Z[x]/(q, defining_poly).
struct ModElement {
    std::vector<mpz_class> coords;
    mpz_class modulus;
    bool is_zero() const;
    friend bool operator==(const ModElement&, const ModElement&) = default;
};

ModElement nf_reduce_mod(const NumberField& K, const FieldElement& a, const mpz_class& q);
ModElement nf_mod_add(const NumberField& K, const ModElement& a, const ModElement& b);
ModElement nf_mod_sub(const NumberField& K, const ModElement& a, const ModElement& b);
ModElement nf_mod_mul(const NumberField& K, const ModElement& a, const ModElement& b);
ModElement nf_mod_pow(const NumberField& K, const ModElement& a, const mpz_class& n);

/// a^n in Z[x]/(q, defining_poly) by square-and-multiply. a must have
/// integer coordinates.
ModElement nf_pow_mod(const NumberField& K, const FieldElement& a, const mpz_class& n, const mpz_class& q);

enum class SplitStatus { certified, index_obstructed };

struct SplittingData {
    mpz_class p;
    unsigned e = 1;
    unsigned f = 1;
    unsigned g = 1;
    SplitStatus status = SplitStatus::certified;
    /// Full (degree, multiplicity) shape of the defining polynomial mod p.
    std::vector<FactorShape> shape;
};

/// Ramification index, inertial degree and number of primes above p.
/// Throws NotGalois when the shape is non-uniform for a field claimed Galois.
SplittingData splitting_data(const NumberField& K, const mpz_class& p);

/// Prime divisors of disc(defining_poly): every ramified prime and every
/// prime dividing the index [O_K : Z[theta]]. Empty for Q.
std::vector<mpz_class> ramified_candidates(const NumberField& K, const FactorEffort& effort = {});

struct ClearedDenominators {
    mpz_class q;
    std::vector<FieldElement> scaled;
};

/// Least q > 0 such that every q * a has integer coordinates.
ClearedDenominators clear_denominators(const NumberField& K, std::span<const FieldElement> elements);

} // namespace primezero

#endif
