#include "primezero/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "linalg.hpp"
#include "primezero/errors.hpp"
#include "primezero/resultant.hpp"

namespace primezero {

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(std::vector<mpz_class> numerators, mpz_class denominator)
    : num_(std::move(numerators)), den_(std::move(denominator))
{
    if (den_ == 0) throw InvalidArgument("FieldElement: zero denominator");
    normalize();
}

FieldElement FieldElement::from_rationals(std::span<const Rational> coords)
{
    mpz_class den = 1;
    for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) num[i] = coords[i].get_num() * (den / coords[i].get_den());
    return FieldElement(std::move(num), std::move(den));
}

FieldElement FieldElement::rational(std::size_t degree, const Rational& value)
{
    std::vector<mpz_class> num(degree);
    if (degree == 0) throw InvalidArgument("FieldElement: field degree must be positive");
    num[0] = value.get_num();
    return FieldElement(std::move(num), value.get_den());
}

void FieldElement::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational FieldElement::coord(std::size_t i) const
{
    Rational r(num_.at(i), den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> FieldElement::coords() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coord(i));
    return out;
}

bool FieldElement::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(num_.begin() + (num_.empty() ? 0 : 1), num_.end(), [](const mpz_class& c) { return c == 0; });
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

std::string FieldElement::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) os << ", ";
        os << coord(i).get_str();
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------------- field

NumberField::NumberField(IntPolynomial defining_poly, bool galois_claimed)
    : poly_(std::move(defining_poly)), galois_(galois_claimed)
{
    if (!poly_.is_monic() || poly_.degree() < 1)
        throw InvalidArgument("NumberField: defining polynomial must be monic of degree >= 1");
    degree_ = static_cast<std::size_t>(poly_.degree());
}

NumberField NumberField::rationals() { return NumberField(IntPolynomial{0, 1}, true); }

FieldElement NumberField::element(std::span<const Rational> coords) const
{
    if (coords.size() != degree_) throw InvalidArgument("element: coordinate count differs from field degree");
    return FieldElement::from_rationals(coords);
}

FieldElement NumberField::element(std::initializer_list<long> coords) const
{
    std::vector<Rational> c;
    for (long v : coords) c.emplace_back(v);
    return element(c);
}

void NumberField::reduce(std::vector<mpz_class>& v) const
{
    const auto mu = poly_.coefficients();
    for (std::size_t i = v.size(); i-- > degree_;) {
        if (v[i] == 0) continue;
        const mpz_class c = v[i];
        for (std::size_t j = 0; j < degree_; ++j)
            if (mu[j] != 0) mpz_submul(v[i - degree_ + j].get_mpz_t(), c.get_mpz_t(), mu[j].get_mpz_t());
        v[i] = 0;
    }
    v.resize(degree_);
}

namespace {

void check_member(const NumberField& K, const FieldElement& a)
{
    if (!K.contains(a)) throw InvalidArgument("field element does not belong to the field (coordinate length)");
}

std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b)
{
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

} // namespace

FieldElement nf_add(const NumberField& K, const FieldElement& a, const FieldElement& b)
{
    check_member(K, a);
    check_member(K, b);
    std::vector<mpz_class> num(K.degree());
    if (a.denominator() == b.denominator()) {
        for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.numerators()[i] + b.numerators()[i];
        return FieldElement(std::move(num), a.denominator());
    }
    for (std::size_t i = 0; i < num.size(); ++i)
        num[i] = a.numerators()[i] * b.denominator() + b.numerators()[i] * a.denominator();
    return FieldElement(std::move(num), a.denominator() * b.denominator());
}

FieldElement nf_sub(const NumberField& K, const FieldElement& a, const FieldElement& b) { return nf_add(K, a, -b); }

FieldElement nf_mul(const NumberField& K, const FieldElement& a, const FieldElement& b)
{
    check_member(K, a);
    check_member(K, b);
    std::vector<mpz_class> prod = convolve(a.numerators(), b.numerators());
    K.reduce(prod);
    return FieldElement(std::move(prod), a.denominator() * b.denominator());
}

FieldElement nf_scale(const NumberField& K, const FieldElement& a, const Rational& c)
{
    check_member(K, a);
    std::vector<mpz_class> num = a.numerators();
    for (auto& x : num) x *= c.get_num();
    return FieldElement(std::move(num), a.denominator() * c.get_den());
}

FieldElement nf_pow(const NumberField& K, const FieldElement& a, const mpz_class& n)
{
    check_member(K, a);
    if (n < 0) throw InvalidArgument("nf_pow: negative exponent");
    FieldElement result = K.one();
    const long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    if (n == 0) return result;
    for (long i = bits - 1; i >= 0; --i) {
        result = nf_mul(K, result, result);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = nf_mul(K, result, a);
    }
    return result;
}

FieldElement nf_pow(const NumberField& K, const FieldElement& a, unsigned long n) { return nf_pow(K, a, mpz_class(n)); }

namespace {

// Column j holds the coordinates of a * theta^j.
detail::RatMatrix multiplication_matrix(const NumberField& K, const FieldElement& a)
{
    const std::size_t d = K.degree();
    detail::RatMatrix m(d, std::vector<mpq_class>(d));
    std::vector<mpz_class> col = a.numerators();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            m[i][j] = mpq_class(col[i], a.denominator());
            m[i][j].canonicalize();
        }
        // multiply by theta
        col.insert(col.begin(), mpz_class(0));
        K.reduce(col);
    }
    return m;
}

} // namespace

FieldElement nf_inverse(const NumberField& K, const FieldElement& a)
{
    check_member(K, a);
    if (a.is_zero()) throw InvalidArgument("nf_inverse: zero has no inverse");
    std::vector<mpq_class> e0(K.degree());
    e0[0] = 1;
    auto x = detail::solve(multiplication_matrix(K, a), e0);
    if (!x) throw InvalidArgument("nf_inverse: element is a zero divisor (defining polynomial reducible)");
    return FieldElement::from_rationals(*x);
}

Rational nf_norm(const NumberField& K, const FieldElement& a)
{
    check_member(K, a);
    if (a.is_zero()) return 0;
    const mpz_class r = resultant(K.defining_poly(), IntPolynomial(a.numerators()));
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), static_cast<unsigned long>(K.degree()));
    Rational out(r, den);
    out.canonicalize();
    return out;
}

std::vector<Rational> nf_charpoly(const NumberField& K, const FieldElement& a)
{
    check_member(K, a);
    // Faddeev-LeVerrier
    const std::size_t d = K.degree();
    const detail::RatMatrix A = multiplication_matrix(K, a);
    std::vector<Rational> c(d + 1);
    c[d] = 1;
    detail::RatMatrix M(d, std::vector<mpq_class>(d));
    for (std::size_t k = 1; k <= d; ++k) {
        detail::RatMatrix AM(d, std::vector<mpq_class>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                mpq_class s = 0;
                for (std::size_t t = 0; t < d; ++t) s += A[i][t] * M[t][j];
                AM[i][j] = s;
            }
        // M_k = A M_{k-1} + c_{d-k+1} I
        for (std::size_t i = 0; i < d; ++i) AM[i][i] += c[d - k + 1];
        M = AM;
        mpq_class tr = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t t = 0; t < d; ++t) tr += A[i][t] * M[t][i];
        c[d - k] = -tr / static_cast<long>(k);
    }
    return c;
}

bool nf_is_algebraic_integer(const NumberField& K, const FieldElement& a)
{
    for (const auto& c : nf_charpoly(K, a))
        if (c.get_den() != 1) return false;
    return true;
}

// ----------------------------------------------------------------- modular

bool ModElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const mpz_class& c) { return c == 0; });
}

namespace {

void reduce_mod(std::vector<mpz_class>& v, const mpz_class& q)
{
    for (auto& c : v) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
}

void check_modulus(const mpz_class& q)
{
    if (q < 2) throw InvalidArgument("modulus must be at least 2");
}

} // namespace

ModElement nf_reduce_mod(const NumberField& K, const FieldElement& a, const mpz_class& q)
{
    check_member(K, a);
    check_modulus(q);
    if (!a.is_integral()) throw InvalidArgument("modular reduction requires integer coordinates");
    ModElement r{a.numerators(), q};
    reduce_mod(r.coords, q);
    return r;
}

ModElement nf_mod_add(const NumberField&, const ModElement& a, const ModElement& b)
{
    ModElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
        r.coords[i] += b.coords[i];
        if (r.coords[i] >= r.modulus) r.coords[i] -= r.modulus;
    }
    return r;
}

ModElement nf_mod_sub(const NumberField&, const ModElement& a, const ModElement& b)
{
    ModElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
        r.coords[i] -= b.coords[i];
        if (r.coords[i] < 0) r.coords[i] += r.modulus;
    }
    return r;
}

ModElement nf_mod_mul(const NumberField& K, const ModElement& a, const ModElement& b)
{
    std::vector<mpz_class> prod = convolve(a.coords, b.coords);
    reduce_mod(prod, a.modulus);
    K.reduce(prod);
    reduce_mod(prod, a.modulus);
    return ModElement{std::move(prod), a.modulus};
}

ModElement nf_mod_pow(const NumberField& K, const ModElement& a, const mpz_class& n)
{
    if (n < 0) throw InvalidArgument("nf_mod_pow: negative exponent");
    ModElement result = nf_reduce_mod(K, K.one(), a.modulus);
    const long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    if (n == 0) return result;
    for (long i = bits - 1; i >= 0; --i) {
        result = nf_mod_mul(K, result, result);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = nf_mod_mul(K, result, a);
    }
    return result;
}

ModElement nf_pow_mod(const NumberField& K, const FieldElement& a, const mpz_class& n, const mpz_class& q)
{
    return nf_mod_pow(K, nf_reduce_mod(K, a, q), n);
}

// --------------------------------------------------------------- splitting

SplittingData splitting_data(const NumberField& K, const mpz_class& p)
{
    if (!is_prime(p)) throw InvalidArgument("splitting_data: p is not prime");
    SplittingData sd;
    sd.p = p;
    const unsigned d = static_cast<unsigned>(K.degree());
    if (d == 1) {
        sd.shape = {{1, 1}};
        return sd;
    }

    const fp::Poly mu = fp::reduce(K.defining_poly(), p);
    const bool squarefree = fp::degree(fp::gcd(mu, fp::derivative(mu, p), p)) == 0;

    if (squarefree) {
        // smallest f with gcd(x^(p^f) - x, mu) nontrivial
        const fp::Poly x{mpz_class(0), mpz_class(1)};
        fp::Poly w = fp::mod(x, mu, p);
        unsigned f = 0;
        int gdeg = 0;
        while (gdeg == 0) {
            ++f;
            w = fp::powmod(w, p, mu, p);
            gdeg = fp::degree(fp::gcd(fp::sub(w, x, p), mu, p));
        }
        if (static_cast<unsigned>(gdeg) == d) {
            sd.e = 1;
            sd.f = f;
            sd.g = d / f;
            sd.shape.assign(sd.g, FactorShape{f, 1});
            return sd;
        }
        if (K.galois_claimed())
            throw NotGalois("defining polynomial has non-uniform factor degrees mod " + p.get_str() +
                            " although the field was declared Galois");
        sd.shape = factor_degrees_mod_p(K.defining_poly(), p);
        sd.e = 1;
        sd.f = f;
        sd.g = static_cast<unsigned>(sd.shape.size());
        return sd;
    }

    sd.shape = factor_degrees_mod_p(K.defining_poly(), p);
    const bool uniform = std::all_of(sd.shape.begin(), sd.shape.end(),
                                     [&](const FactorShape& s) { return s == sd.shape.front(); });
    sd.e = sd.shape.front().multiplicity;
    sd.f = sd.shape.front().degree;
    sd.g = static_cast<unsigned>(sd.shape.size());
    if (dedekind_p_maximal(K.defining_poly(), p)) {
        if (!uniform && K.galois_claimed())
            throw NotGalois("ramified prime " + p.get_str() +
                            " has non-uniform decomposition although the field was declared Galois");
        sd.status = SplitStatus::certified;
    } else {
        sd.status = SplitStatus::index_obstructed;
    }
    return sd;
}

std::vector<mpz_class> ramified_candidates(const NumberField& K, const FactorEffort& effort)
{
    if (K.degree() == 1) return {};
    return distinct(factor_integer(discriminant(K.defining_poly()), effort));
}

ClearedDenominators clear_denominators(const NumberField& K, std::span<const FieldElement> elements)
{
    ClearedDenominators out{1, {}};
    for (const auto& a : elements) {
        check_member(K, a);
        mpz_lcm(out.q.get_mpz_t(), out.q.get_mpz_t(), a.denominator().get_mpz_t());
    }
    out.scaled.reserve(elements.size());
    for (const auto& a : elements) out.scaled.push_back(nf_scale(K, a, Rational(out.q)));
    return out;
}

} // namespace primezero
