#include <sstream>

#include "json.hpp"
#include "primezero/io/report.hpp"

namespace primezero::io {

using json = nlohmann::ordered_json;

namespace {

// Exact values above this many characters are summarized, not inlined.
constexpr std::size_t kInlineLimit = 4096;

json element_json(const FieldElement& a)
{
    json coords = json::array();
    for (const auto& q : a.coords()) coords.push_back(q.get_str());
    return coords;
}

std::size_t element_size(const FieldElement& a)
{
    std::size_t total = mpz_sizeinbase(a.denominator().get_mpz_t(), 10);
    for (const auto& c : a.numerators()) total += mpz_sizeinbase(c.get_mpz_t(), 10);
    return total;
}

json value_json(const FieldElement& a)
{
    if (element_size(a) <= kInlineLimit) return element_json(a);
    json summary = json::array();
    for (const auto& q : a.coords()) {
        const mpz_class num = q.get_num();
        const std::string digits = num == 0 ? "0" : mpz_class(abs(num)).get_str();
        summary.push_back(json{{"sign", sgn(num)}, {"digits", digits.size()}, {"approx", scientific(num, 6)}});
    }
    return json{{"summary", summary}};
}

json strings(const std::vector<mpz_class>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

} // namespace

std::string scientific(const mpz_class& value, unsigned digits)
{
    if (value == 0) return "0";
    const mpz_class a = abs(value);
    const std::string sign = value < 0 ? "-" : "";
    const std::size_t len = a.get_str().size();
    if (len <= digits) return sign + a.get_str();
    mpz_class scale, lead;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, len - digits);
    lead = (2 * a + scale) / (2 * scale);
    std::size_t exponent = len - 1;
    std::string s = lead.get_str();
    if (s.size() > digits) {
        s.pop_back();
        ++exponent;
    }
    std::string mantissa = s.substr(0, 1);
    if (digits > 1) mantissa += "." + s.substr(1, digits - 1);
    return sign + mantissa + "e" + std::to_string(exponent);
}

std::string report_to_json(const DecisionReport& r)
{
    json root;
    root["schema"] = kReportSchema;

    json family;
    family["kind"] = family_name(r.family.kind);
    family["c"] = r.family.c;
    family["min_k"] = r.family.min_k;
    json pattern = json::array();
    for (const auto& part : r.family.pattern) pattern.push_back(json{{"l", part.l}, {"k", part.k}});
    family["pattern"] = pattern;
    root["family"] = family;

    root["config"] = json{{"exact_ceiling", r.verify.exact_ceiling.get_str()},
                          {"prefer_exact_below", r.verify.prefer_exact_below.get_str()},
                          {"witness_count", r.verify.witness_count},
                          {"witness_seed", std::to_string(r.verify.witness_seed)}};

    root["outcome"] = outcome_name(r.outcome);
    if (r.zero) {
        json z;
        z["n"] = r.zero->n.get_str();
        z["l"] = r.zero->ell;
        z["k"] = r.zero->k ? json(*r.zero->k) : json(nullptr);
        z["p"] = r.zero->p ? json(r.zero->p->get_str()) : json(nullptr);
        z["f"] = r.zero->f;
        root["zero"] = z;
    } else {
        root["zero"] = nullptr;
    }
    json obstructions = json::array();
    for (const auto& o : r.obstructions) obstructions.push_back(json{{"kind", o.kind}, {"detail", o.detail}});
    root["obstructions"] = obstructions;
    root["short_circuit"] = r.short_circuit;
    root["scaling"] = json{{"root_scale", r.root_scale.get_str()},
                           {"coefficient_multiplier", r.coefficient_multiplier.get_str()}};

    json multipliers = json::array();
    for (const auto& m : r.multipliers) {
        json jm;
        jm["l"] = m.ell;
        jm["value"] = value_json(m.value);
        jm["norm"] = m.norm.get_str();
        jm["candidates"] = strings(m.candidates);
        jm["unfactored"] = strings(m.unfactored);
        multipliers.push_back(jm);
    }
    root["multipliers"] = multipliers;
    root["excluded_multipliers"] = r.excluded_multipliers;
    root["ramified_candidates"] = strings(r.ramified_candidates);

    json ramified = json::array();
    for (const auto& rr : r.ramified) {
        json jr;
        jr["p"] = rr.p.get_str();
        jr["e"] = rr.split.e;
        jr["f"] = rr.split.f;
        jr["g"] = rr.split.g;
        jr["status"] = rr.split.status == SplitStatus::certified ? "certified" : "index-obstructed";
        jr["treatment"] = rr.treatment;
        ramified.push_back(jr);
    }
    root["ramified"] = ramified;

    json branches = json::array();
    for (const auto& b : r.branches) {
        json jb;
        jb["source"] = branch_source_name(b.source);
        jb["l"] = b.ell;
        jb["k"] = b.k;
        jb["p"] = b.p.get_str();
        jb["f"] = b.f;
        jb["n"] = b.n.get_str();
        jb["membership"] = membership_name(b.membership);
        jb["result"] = zero_kind_name(b.result);
        branches.push_back(jb);
    }
    root["branches"] = branches;

    json evidence = json::array();
    for (const auto& s : r.evidence) {
        json je;
        je["n"] = s.n.get_str();
        je["result"] = zero_kind_name(s.kind);
        je["value"] = s.value ? value_json(*s.value) : json(nullptr);
        json w = json::array();
        for (const auto& wr : s.witnesses) w.push_back(json{{"q", wr.q.get_str()}, {"nonzero", wr.nonzero}});
        je["witnesses"] = w;
        evidence.push_back(je);
    }
    root["evidence"] = evidence;
    root["witness_primes"] = strings(r.witness_primes);
    return root.dump(2) + "\n";
}

std::string report_to_text(const DecisionReport& r)
{
    std::ostringstream os;
    os << "family: " << family_name(r.family.kind) << " c=" << r.family.c;
    if (r.family.min_k) os << " min_k=" << r.family.min_k;
    if (!r.family.pattern.empty()) {
        os << " pattern=";
        for (std::size_t i = 0; i < r.family.pattern.size(); ++i)
            os << (i ? "," : "") << r.family.pattern[i].l << ":" << r.family.pattern[i].k;
    }
    os << "\noutcome: " << outcome_name(r.outcome) << "\n";
    if (r.zero) {
        os << "zero: n=" << r.zero->n << " l=" << r.zero->ell;
        if (r.zero->k) os << " k=" << *r.zero->k;
        if (r.zero->p) os << " p=" << *r.zero->p;
        os << "\n";
    }
    if (r.short_circuit) os << "associated simple sequence vanishes identically, so u_0 = 0\n";
    if (r.root_scale != 1 || r.coefficient_multiplier != 1)
        os << "scaled by roots x" << r.root_scale << ", coefficients x" << r.coefficient_multiplier << "\n";
    for (const auto& m : r.multipliers) {
        os << "l=" << m.ell << " value=" << m.value.to_string() << " |norm|=" << m.norm << " candidates={";
        for (std::size_t i = 0; i < m.candidates.size(); ++i) os << (i ? ", " : "") << m.candidates[i];
        os << "}";
        if (!m.unfactored.empty()) os << " unfactored=" << m.unfactored.size();
        os << "\n";
    }
    for (unsigned long e : r.excluded_multipliers) os << "l=" << e << " excluded (v_l = 0)\n";
    for (const auto& rr : r.ramified)
        os << "ramified candidate p=" << rr.p << " (e=" << rr.split.e << " f=" << rr.split.f << " g=" << rr.split.g
           << "): " << rr.treatment << "\n";
    std::size_t exact = 0, witness = 0, unresolved = 0, zeros = 0;
    for (const auto& s : r.evidence) {
        switch (s.kind) {
        case ZeroKind::zero: ++zeros; break;
        case ZeroKind::nonzero_exact: ++exact; break;
        case ZeroKind::nonzero_witness: ++witness; break;
        case ZeroKind::unresolved_too_large: ++unresolved; break;
        }
    }
    os << "indices checked: " << r.evidence.size() << " (" << exact << " nonzero exact, " << witness
       << " nonzero by witness, " << zeros << " zero, " << unresolved << " too large)\n";
    for (const auto& s : r.evidence) {
        if (r.evidence.size() > 20 && s.kind != ZeroKind::zero) continue;
        os << "  n=" << s.n << ": " << zero_kind_name(s.kind);
        if (s.kind == ZeroKind::nonzero_witness) os << " (q=" << s.witnesses.back().q << ")";
        if (s.value && s.value->is_rational() && s.kind == ZeroKind::nonzero_exact)
            os << " (value " << scientific(s.value->coord(0).get_num()) << ")";
        os << "\n";
    }
    for (const auto& o : r.obstructions) os << "obstruction [" << o.kind << "]: " << o.detail << "\n";
    return os.str();
}

} // namespace primezero::io
