#ifndef PRIMEZERO_SKOLEM_HPP
#define PRIMEZERO_SKOLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primezero/lrs.hpp"
#include "primezero/number_field.hpp"
#include "primezero/primes.hpp"

namespace primezero {

enum class Family { prime_power, prime_power_multiple, inertial, sum };

const char* family_name(Family f);

struct SumPart {
    unsigned long l = 0;
    unsigned long k = 0;
    friend bool operator==(const SumPart&, const SumPart&) = default;
};

/// Index family searched by decide.
///   prime_power:          n = p^k,               min_k <= k <= c
///   prime_power_multiple: n = l p^k,             l in L_c, min_k <= k <= c
///   inertial:             n = l p^(k f(p)),      l in L_c, min_k <= k <= c
///   sum:                  n = sum_j l_j p^(k_j f(p)) for a fixed pattern
struct FamilySpec {
    Family kind = Family::prime_power;
    unsigned long c = 1;
    unsigned long min_k = 0;
    std::vector<SumPart> pattern;

    static FamilySpec prime_power(unsigned long c, unsigned long min_k = 0);
    static FamilySpec multiple(unsigned long c, unsigned long min_k = 0);
    static FamilySpec inertial(unsigned long c, unsigned long min_k = 0);
    static FamilySpec sum(std::vector<SumPart> pattern, unsigned long c);

    /// S_1 = sum of the l_j.
    unsigned long pattern_weight() const;
    /// Sum of the l_j whose k_j is zero; those parts do not move with p.
    unsigned long pattern_fixed_part() const;

    void validate() const;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct VerifyConfig {
    mpz_class exact_ceiling = mpz_class(1) << 20;
    /// Indices up to this bound are evaluated exactly before any witness.
    mpz_class prefer_exact_below = 1024;
    unsigned witness_count = 16;
    std::uint64_t witness_seed = 0;
};

struct DecisionConfig {
    VerifyConfig verify;
    unsigned threads = 1;
    FactorEffort effort;
};

enum class ZeroKind { zero, nonzero_exact, nonzero_witness, unresolved_too_large };

const char* zero_kind_name(ZeroKind k);

struct WitnessResult {
    mpz_class q;
    bool nonzero = false;
    friend bool operator==(const WitnessResult&, const WitnessResult&) = default;
};

struct ZeroStatus {
    ZeroKind kind = ZeroKind::unresolved_too_large;
    mpz_class n;
    /// Exact value when decided by exact evaluation.
    std::optional<FieldElement> value;
    /// Witness primes tried, in order; the last one is the certificate for
    /// nonzero_witness.
    std::vector<WitnessResult> witnesses;
};

/// Deterministic witness primes of about 62 bits that avoid the divisors
/// of avoid.
std::vector<mpz_class> witness_primes(unsigned count, std::uint64_t seed, const mpz_class& avoid = 1);

/// Decides whether u_n vanishes. Zero is only ever reported from exact
/// evaluation. seq must be integral_certified.
ZeroStatus verify_candidate(const ExpPolySequence& seq, const mpz_class& n, const VerifyConfig& config);
ZeroStatus verify_candidate(const ExpPolySequence& seq, const mpz_class& n, const VerifyConfig& config,
                            const std::vector<mpz_class>& witnesses);

struct Multiplier {
    unsigned long ell = 0;
    FieldElement value;
};

struct AdmissibleMultipliers {
    std::vector<Multiplier> multipliers;
    /// v is identically zero, so u_0 = v_0 = 0.
    bool short_circuit = false;
};

/// L_c = { l <= c : v_l != 0 } for the associated simple sequence v.
AdmissibleMultipliers admissible_multipliers(const ExpPolySequence& seq, unsigned long c);

struct CandidatePrimes {
    std::vector<mpz_class> primes;  ///< sorted, distinct
    mpz_class norm;                 ///< |N(b)|, the source of the primes
    std::vector<mpz_class> unfactored;  ///< composite cofactors left over
};

/// Prime divisors of |N(b)|. A factoring budget overrun leaves the remaining
/// cofactors in unfactored instead of throwing.
CandidatePrimes candidate_primes(const NumberField& K, const FieldElement& b, const FactorEffort& effort = {});
CandidatePrimes candidate_primes(const ExpPolySequence& seq, unsigned long ell, const FactorEffort& effort = {});

/// Sum of A_i(s0) lambda_i^S1, the value every u_{S_p} is congruent to for
/// unramified p, where s0 is the fixed part of the pattern.
FieldElement sum_gate_value(const ExpPolySequence& seq, const FamilySpec& family);

enum class BranchSource { base, candidate, ramified };
enum class Membership { member, non_member, uncertified };

const char* branch_source_name(BranchSource s);
const char* membership_name(Membership m);

/// One index visited by decide.
struct Branch {
    BranchSource source = BranchSource::candidate;
    unsigned long ell = 0;
    unsigned long k = 0;
    mpz_class p;        ///< 0 for base indices
    unsigned f = 1;     ///< exponent multiplier used (f' for ramified branches)
    mpz_class n;
    Membership membership = Membership::member;
    ZeroKind result = ZeroKind::unresolved_too_large;
};

struct MultiplierRecord {
    unsigned long ell = 0;
    FieldElement value;
    mpz_class norm;
    std::vector<mpz_class> candidates;
    std::vector<mpz_class> unfactored;
};

struct RamifiedRecord {
    mpz_class p;
    SplittingData split;
    std::string treatment;
};

struct Obstruction {
    std::string kind;
    std::string detail;
};

enum class Outcome { zero_found, no_zero, unresolved };

const char* outcome_name(Outcome o);

struct ZeroHit {
    mpz_class n;
    unsigned long ell = 0;
    std::optional<unsigned long> k;
    std::optional<mpz_class> p;
    unsigned f = 1;
};

struct DecisionReport {
    FamilySpec family;
    VerifyConfig verify;
    Outcome outcome = Outcome::unresolved;
    std::optional<ZeroHit> zero;
    std::vector<Obstruction> obstructions;
    bool short_circuit = false;
    mpz_class root_scale = 1;
    mpz_class coefficient_multiplier = 1;
    std::vector<MultiplierRecord> multipliers;
    std::vector<unsigned long> excluded_multipliers;
    std::vector<mpz_class> ramified_candidates;
    std::vector<RamifiedRecord> ramified;
    std::vector<Branch> branches;           ///< sorted by (ell, k, p, f, n)
    std::vector<ZeroStatus> evidence;       ///< one per distinct n, ascending
    std::vector<mpz_class> witness_primes;
};

/// Searches the family for a zero of seq and assembles a certificate.
DecisionReport decide(const ExpPolySequence& seq, const FamilySpec& family, const DecisionConfig& config = {});

enum class GapMode { simple, polynomial, inertial, sum };

const char* gap_mode_name(GapMode m);

struct GapQuery {
    GapMode mode = GapMode::simple;
    unsigned long ell = 1;
    mpz_class p;
    unsigned long k = 1;
    std::vector<SumPart> pattern;  ///< sum mode only
};

/// The difference named by the mode, evaluated exactly:
///   simple      v_l^(p^k) - v_(l p^k)
///   polynomial  v_l^(p^k) - u_(l p^k)
///   inertial    v_l - u_(l p^(k f))
///   sum         u_(S_p) - v_(S_1)
/// Every coordinate is divisible by p when the hypotheses hold.
FieldElement congruence_gap(const ExpPolySequence& seq, const GapQuery& query);

/// The same difference reduced into Z[x]/(p, mu) without forming the huge
/// exact powers.
ModElement congruence_gap_residue(const ExpPolySequence& seq, const GapQuery& query);

struct OracleHit {
    mpz_class n;
    mpz_class p;  ///< 0 for k = 0 base indices
    unsigned long ell = 0;
    unsigned long k = 0;
    friend bool operator==(const OracleHit&, const OracleHit&) = default;
};

struct OracleOptions {
    mpz_class max_index = mpz_class(1) << 20;
    /// Skip exact evaluation for indices whose image modulo a word-sized
    /// prime is nonzero.
    bool residue_filter = true;
};

/// Scans every family index with p <= p_max in increasing n and returns the
/// first zero. Independent of decide.
std::optional<OracleHit> brute_force_oracle(const ExpPolySequence& seq, const FamilySpec& family,
                                            unsigned long p_max, const OracleOptions& options = {});

struct AuditResult {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Replays a report: checks branch coverage, witness evidence, and exact
/// evidence for small indices.
AuditResult audit_report(const ExpPolySequence& seq, const FamilySpec& family, const DecisionConfig& config,
                         const DecisionReport& report);

} // namespace primezero

#endif
