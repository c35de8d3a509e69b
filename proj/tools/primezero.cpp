// primezero: decide zeros of linear recurrences on prime-indexed families.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primezero/hardness.hpp"
#include "primezero/io/document.hpp"
#include "primezero/io/report.hpp"
#include "primezero/skolem.hpp"

namespace {

using namespace primezero;
using json = nlohmann::ordered_json;

constexpr int kExitNoZero = 0;
constexpr int kExitZeroFound = 10;
constexpr int kExitUnresolved = 20;
constexpr int kExitInputError = 1;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

mpz_class parse_natural(const std::string& s, const char* what)
{
    const Rational q = io::parse_rational(s);
    if (q.get_den() != 1 || q < 0) throw InvalidArgument(std::string(what) + " must be a natural number");
    return q.get_num();
}

std::vector<SumPart> parse_pattern(const std::string& s)
{
    std::vector<SumPart> out;
    for (const auto& item : split(s, ',')) {
        const auto pos = item.find(':');
        if (pos == std::string::npos) throw InvalidArgument("sum pattern entries look like l:k, got \"" + item + "\"");
        out.push_back({parse_natural(item.substr(0, pos), "l").get_ui(), parse_natural(item.substr(pos + 1), "k").get_ui()});
    }
    return out;
}

struct FamilyArgs {
    std::string kind = "prime-power";
    unsigned long c = 1;
    unsigned long min_k = 0;
    std::string pattern;

    FamilySpec build() const
    {
        if (kind == "prime-power") return FamilySpec::prime_power(c, min_k);
        if (kind == "multiple") return FamilySpec::multiple(c, min_k);
        if (kind == "inertial") return FamilySpec::inertial(c, min_k);
        if (kind == "sum") {
            if (min_k) throw InvalidArgument("--min-k does not apply to the sum family");
            return FamilySpec::sum(parse_pattern(pattern), c);
        }
        throw InvalidArgument("unknown family \"" + kind + "\"");
    }
};

void add_family_options(CLI::App* cmd, FamilyArgs& f)
{
    cmd->add_option("--family", f.kind, "prime-power | multiple | inertial | sum")
        ->check(CLI::IsMember({"prime-power", "multiple", "inertial", "sum"}));
    cmd->add_option("--c", f.c, "bound c on k (and on l for multiplier families)");
    cmd->add_option("--min-k", f.min_k, "smallest exponent k searched (1 restricts prime-power to primes)");
    cmd->add_option("--sum-pattern", f.pattern, "sum family parts as l1:k1,l2:k2,...");
}

int outcome_exit(Outcome o)
{
    switch (o) {
    case Outcome::no_zero: return kExitNoZero;
    case Outcome::zero_found: return kExitZeroFound;
    case Outcome::unresolved: return kExitUnresolved;
    }
    return kExitUnresolved;
}

void print_element(std::ostream& os, const FieldElement& v)
{
    const auto coords = v.coords();
    if (v.is_rational()) {
        os << coords[0].get_str() << "\n";
        if (coords[0].get_den() == 1 && mpz_sizeinbase(coords[0].get_num_mpz_t(), 10) > 12)
            os << "# " << io::scientific(coords[0].get_num(), 4) << ", "
               << mpz_class(abs(coords[0].get_num())).get_str().size() << " digits\n";
        return;
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        os << "theta^" << i << ": " << coords[i].get_str() << "\n";
        if (coords[i].get_den() == 1 && mpz_sizeinbase(coords[i].get_num_mpz_t(), 10) > 12)
            os << "# " << io::scientific(coords[i].get_num(), 4) << "\n";
    }
}

int run_decide(const std::string& input, const FamilyArgs& fa, const std::string& ceiling, unsigned witnesses,
               std::uint64_t seed, unsigned threads, bool as_json)
{
    const ExpPolySequence seq = io::to_sequence(io::read_document(input));
    DecisionConfig config;
    config.verify.exact_ceiling = parse_natural(ceiling, "--exact-ceiling");
    config.verify.witness_count = witnesses;
    config.verify.witness_seed = seed;
    config.threads = threads;
    const DecisionReport report = decide(seq, fa.build(), config);
    std::cout << (as_json ? io::report_to_json(report) : io::report_to_text(report));
    return outcome_exit(report.outcome);
}

int run_eval(const std::string& input, const std::string& n_text, const std::string& mod_text)
{
    const ExpPolySequence seq = io::to_sequence(io::read_document(input));
    const mpz_class n = parse_natural(n_text, "--n");
    if (mod_text.empty()) {
        print_element(std::cout, eval_exp_poly(seq, n));
        return 0;
    }
    const mpz_class q = parse_natural(mod_text, "--mod");
    if (q < 2) throw InvalidArgument("--mod must be at least 2");
    const ScaledSequence scaled = scale_to_integral(seq);
    if (scaled.root_scale != 1 || scaled.coefficient_multiplier != 1)
        throw InvalidArgument("--mod needs a sequence with integer coordinates");
    const ModElement r = eval_exp_poly_mod(scaled.sequence, n, q);
    for (std::size_t i = 0; i < r.coords.size(); ++i) std::cout << (i ? " " : "") << r.coords[i];
    std::cout << "\n";
    return 0;
}

int run_field_info(const std::string& input, const std::string& primes_text)
{
    const NumberField K = io::document_field(io::read_document(input));
    std::cout << "defining polynomial: " << K.defining_poly() << " (degree " << K.degree()
              << (K.galois_claimed() ? ", claimed Galois" : "") << ")\n";
    std::cout << "ramified candidates: {";
    const auto ram = ramified_candidates(K);
    for (std::size_t i = 0; i < ram.size(); ++i) std::cout << (i ? ", " : "") << ram[i];
    std::cout << "}\n";
    for (const auto& item : split(primes_text, ',')) {
        const mpz_class p = parse_natural(item, "prime");
        const SplittingData sd = splitting_data(K, p);
        std::cout << p << ": e" << sd.e << " f" << sd.f << " g" << sd.g
                  << (sd.status == SplitStatus::certified ? "" : " (index obstructed)") << "\n";
    }
    return 0;
}

int run_gen_hardness(const std::string& a_text, const std::string& b_text, const std::string& variant_name,
                     const std::string& output)
{
    SubsetSumInstance instance;
    for (const auto& item : split(a_text, ',')) {
        const Rational q = io::parse_rational(item);
        if (q.get_den() != 1) throw InvalidArgument("--a entries must be integers");
        instance.a.push_back(q.get_num());
    }
    const Rational b = io::parse_rational(b_text);
    if (b.get_den() != 1) throw InvalidArgument("--b must be an integer");
    instance.b = b.get_num();
    instance.validate();
    const bool prime = variant_name == "prime";
    const SelectorVariant variant = prime ? SelectorVariant::one_phase : SelectorVariant::zero_phase;
    const unsigned m = static_cast<unsigned>(instance.a.size());

    const RecurrenceSpec spec = reduce_to_lrs(instance, variant);
    const RecurrenceSpec minimal = minimal_recurrence(spec);
    const NumberField K = reduction_field(m, variant);
    const auto roots = reduction_roots(minimal, m, variant);
    const std::string doc = io::serialize_document(io::document_from_recurrence(minimal, K, roots));

    json meta;
    meta["schema"] = "primezero.hardness/1";
    meta["variant"] = variant_name;
    json a = json::array();
    for (const auto& x : instance.a) a.push_back(x.get_str());
    meta["a"] = a;
    meta["b"] = instance.b.get_str();
    meta["moduli"] = selector_moduli(m, variant);
    meta["recurrence_order"] = spec.order();
    meta["minimal_order"] = minimal.order();
    const auto subset = subset_sum_bruteforce(instance);
    meta["solvable"] = subset.has_value();
    meta["subset"] = subset ? json(*subset) : json(nullptr);
    if (subset) {
        const mpz_class witness = prime ? prime_in_progression(prime_residue_system(*subset, m)) : zero_phase_index(*subset);
        meta[prime ? "witness_prime" : "witness_index"] = witness.get_str();
    } else {
        meta[prime ? "witness_prime" : "witness_index"] = nullptr;
    }

    if (output.empty() || output == "-") {
        std::cout << doc;
        std::cerr << meta.dump(2) << "\n";
        return 0;
    }
    std::ofstream(output, std::ios::binary) << doc;
    std::ofstream(output + ".meta.json", std::ios::binary) << meta.dump(2) << "\n";
    std::cout << "wrote " << output << " and " << output << ".meta.json\n";
    return 0;
}

int run_oracle(const std::string& input, const FamilyArgs& fa, unsigned long p_max, const std::string& budget)
{
    const ExpPolySequence seq = io::to_sequence(io::read_document(input));
    OracleOptions options;
    options.max_index = parse_natural(budget, "--max-index");
    const auto hit = brute_force_oracle(seq, fa.build(), p_max, options);
    if (!hit) {
        std::cout << "no zero with p <= " << p_max << "\n";
        return kExitNoZero;
    }
    std::cout << "zero at n=" << hit->n << " (p=" << hit->p << ", l=" << hit->ell << ", k=" << hit->k << ")\n";
    return kExitZeroFound;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zeros of linear recurrences on prime-indexed families"};
    app.require_subcommand(1);

    std::string input;
    FamilyArgs family;
    std::string ceiling = "1048576";
    unsigned witnesses = 16;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool as_json = false;
    auto* decide_cmd = app.add_subcommand("decide", "search a family for a zero and print a certificate");
    decide_cmd->add_option("input", input, "sequence document (JSON)")->required();
    add_family_options(decide_cmd, family);
    decide_cmd->add_option("--exact-ceiling", ceiling, "largest index evaluated exactly");
    decide_cmd->add_option("--witnesses", witnesses, "number of witness primes");
    decide_cmd->add_option("--seed", seed, "witness prime seed");
    decide_cmd->add_option("--threads", threads, "verification threads");
    decide_cmd->add_flag("--json", as_json, "print the JSON report");

    std::string n_text, mod_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate u_n exactly or modulo q");
    eval_cmd->add_option("input", input, "sequence document (JSON)")->required();
    eval_cmd->add_option("--n", n_text, "index")->required();
    eval_cmd->add_option("--mod", mod_text, "modulus q");

    std::string primes_text;
    auto* field_cmd = app.add_subcommand("field-info", "splitting data of primes in the document's field");
    field_cmd->add_option("input", input, "sequence document (JSON)")->required();
    field_cmd->add_option("--primes", primes_text, "comma-separated primes");

    std::string a_text, b_text, variant = "prime", output;
    auto* gen_cmd = app.add_subcommand("gen-hardness", "sequence document from a subset-sum instance");
    gen_cmd->add_option("--a", a_text, "comma-separated integers a_1,...,a_m")->required();
    gen_cmd->add_option("--b", b_text, "target")->required();
    gen_cmd->add_option("--variant", variant, "prime | cyclotomic")->check(CLI::IsMember({"prime", "cyclotomic"}));
    gen_cmd->add_option("output", output, "output document path; a .meta.json sidecar is written next to it");

    unsigned long p_max = 100;
    std::string budget = "1048576";
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force scan of family indices with p <= p-max");
    oracle_cmd->add_option("input", input, "sequence document (JSON)")->required();
    add_family_options(oracle_cmd, family);
    oracle_cmd->add_option("--p-max", p_max, "largest prime scanned");
    oracle_cmd->add_option("--max-index", budget, "largest index evaluated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (*decide_cmd) return run_decide(input, family, ceiling, witnesses, seed, threads, as_json);
        if (*eval_cmd) return run_eval(input, n_text, mod_text);
        if (*field_cmd) return run_field_info(input, primes_text);
        if (*gen_cmd) return run_gen_hardness(a_text, b_text, variant, output);
        if (*oracle_cmd) return run_oracle(input, family, p_max, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
