#include "primezero/io/document.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace primezero::io {

using json = nlohmann::ordered_json;

Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
    const std::string s(text);
    if (!std::regex_match(s, pattern)) throw InvalidArgument("not an exact rational: \"" + s + "\"");
    Rational q;
    if (q.set_str(s, 10) != 0) throw InvalidArgument("not an exact rational: \"" + s + "\"");
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

Rational read_rational(const json& j, const std::string& ptr)
{
    if (j.is_number_float()) throw DocumentError(ptr, "floating-point literal not allowed; use an exact string");
    if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
    if (!j.is_string()) throw DocumentError(ptr, "expected an exact rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument& e) {
        throw DocumentError(ptr, e.what());
    }
}

mpz_class read_integer(const json& j, const std::string& ptr)
{
    const Rational q = read_rational(j, ptr);
    if (q.get_den() != 1) throw DocumentError(ptr, "expected an integer");
    return q.get_num();
}

const json& require_array(const json& j, const std::string& ptr)
{
    if (!j.is_array()) throw DocumentError(ptr, "expected an array");
    return j;
}

void require_keys(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed)
{
    if (!j.is_object()) throw DocumentError(ptr, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw DocumentError(child(ptr, key), "unknown key");
    }
}

const json& member(const json& j, const std::string& ptr, const char* key)
{
    auto it = j.find(key);
    if (it == j.end()) throw DocumentError(child(ptr, key), "missing required key");
    return *it;
}

std::vector<Rational> read_coords(const json& j, const std::string& ptr, std::size_t d)
{
    require_array(j, ptr);
    if (j.size() != d)
        throw DocumentError(ptr, "expected " + std::to_string(d) + " coordinates, got " + std::to_string(j.size()));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], child(ptr, i)));
    return out;
}

std::vector<Rational> read_rationals(const json& j, const std::string& ptr)
{
    require_array(j, ptr);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], child(ptr, i)));
    return out;
}

json write_rationals(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const auto& q : v) a.push_back(q.get_str());
    return a;
}

std::vector<Rational> to_coords(const FieldElement& a) { return a.coords(); }

} // namespace

SequenceDocument parse_document(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw DocumentError("", std::string("malformed JSON at byte ") + std::to_string(e.byte));
    }
    require_keys(root, "", {"schema", "field", "terms", "recurrence"});
    const json& schema = member(root, "", "schema");
    if (!schema.is_string() || schema.get<std::string>() != kSequenceSchema)
        throw DocumentError("/schema", std::string("expected \"") + kSequenceSchema + "\"");

    SequenceDocument doc;
    const json& field = member(root, "", "field");
    require_keys(field, "/field", {"defining_poly", "galois"});
    const json& poly = require_array(member(field, "/field", "defining_poly"), "/field/defining_poly");
    for (std::size_t i = 0; i < poly.size(); ++i)
        doc.defining_poly.push_back(read_integer(poly[i], child("/field/defining_poly", i)));
    if (doc.defining_poly.size() < 2 || doc.defining_poly.back() != 1)
        throw DocumentError("/field/defining_poly", "defining polynomial must be monic of degree at least 1");
    if (auto it = field.find("galois"); it != field.end()) {
        if (!it->is_boolean()) throw DocumentError("/field/galois", "expected true or false");
        doc.galois = it->get<bool>();
    }
    const std::size_t d = doc.defining_poly.size() - 1;

    const bool has_terms = root.contains("terms");
    const bool has_rec = root.contains("recurrence");
    if (has_terms == has_rec) throw DocumentError("", "exactly one of \"terms\" and \"recurrence\" must be present");

    if (has_terms) {
        const json& terms = require_array(root["terms"], "/terms");
        doc.terms.emplace();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string ptr = child("/terms", i);
            require_keys(terms[i], ptr, {"lambda", "A"});
            TermDoc t;
            t.lambda = read_coords(member(terms[i], ptr, "lambda"), child(ptr, "lambda"), d);
            const json& A = require_array(member(terms[i], ptr, "A"), child(ptr, "A"));
            if (A.empty()) throw DocumentError(child(ptr, "A"), "coefficient polynomial must be nonempty");
            for (std::size_t j = 0; j < A.size(); ++j) t.A.push_back(read_coords(A[j], child(child(ptr, "A"), j), d));
            doc.terms->push_back(std::move(t));
        }
    } else {
        const json& rec = root["recurrence"];
        require_keys(rec, "/recurrence", {"coeffs", "initial", "roots"});
        RecurrenceDoc r;
        r.coeffs = read_rationals(member(rec, "/recurrence", "coeffs"), "/recurrence/coeffs");
        r.initial = read_rationals(member(rec, "/recurrence", "initial"), "/recurrence/initial");
        if (r.coeffs.size() != r.initial.size())
            throw DocumentError("/recurrence/initial", "needs as many initial values as coefficients");
        if (!r.coeffs.empty() && r.coeffs.back() == 0)
            throw DocumentError(child("/recurrence/coeffs", r.coeffs.size() - 1), "last coefficient must be nonzero");
        const json& roots = require_array(member(rec, "/recurrence", "roots"), "/recurrence/roots");
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const std::string ptr = child("/recurrence/roots", i);
            require_keys(roots[i], ptr, {"value", "multiplicity"});
            RootDoc rd;
            rd.value = read_coords(member(roots[i], ptr, "value"), child(ptr, "value"), d);
            const mpz_class m = read_integer(member(roots[i], ptr, "multiplicity"), child(ptr, "multiplicity"));
            if (m < 1 || m > 1000) throw DocumentError(child(ptr, "multiplicity"), "multiplicity must be in 1..1000");
            rd.multiplicity = static_cast<unsigned>(m.get_ui());
            r.roots.push_back(std::move(rd));
        }
        doc.recurrence = std::move(r);
    }
    return doc;
}

SequenceDocument read_document(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize_document(const SequenceDocument& doc)
{
    json root;
    root["schema"] = kSequenceSchema;
    json field;
    json poly = json::array();
    for (const auto& c : doc.defining_poly) poly.push_back(c.get_str());
    field["defining_poly"] = poly;
    field["galois"] = doc.galois;
    root["field"] = field;
    if (doc.terms) {
        json terms = json::array();
        for (const auto& t : *doc.terms) {
            json jt;
            jt["lambda"] = write_rationals(t.lambda);
            json A = json::array();
            for (const auto& c : t.A) A.push_back(write_rationals(c));
            jt["A"] = A;
            terms.push_back(jt);
        }
        root["terms"] = terms;
    }
    if (doc.recurrence) {
        json rec;
        rec["coeffs"] = write_rationals(doc.recurrence->coeffs);
        rec["initial"] = write_rationals(doc.recurrence->initial);
        json roots = json::array();
        for (const auto& r : doc.recurrence->roots) {
            json jr;
            jr["value"] = write_rationals(r.value);
            jr["multiplicity"] = r.multiplicity;
            roots.push_back(jr);
        }
        rec["roots"] = roots;
        root["recurrence"] = rec;
    }
    return root.dump(2) + "\n";
}

NumberField document_field(const SequenceDocument& doc)
{
    return NumberField(IntPolynomial(doc.defining_poly), doc.galois);
}

ExpPolySequence to_sequence(const SequenceDocument& doc)
{
    const NumberField K = document_field(doc);
    if (doc.terms) {
        std::vector<ExpTerm> terms;
        for (const auto& t : *doc.terms) {
            ExpTerm term{K.element(t.lambda), {}};
            for (const auto& c : t.A) term.coeffs.push_back(K.element(c));
            terms.push_back(std::move(term));
        }
        return make_sequence(K, std::move(terms));
    }
    if (!doc.recurrence) throw InvalidArgument("document has neither terms nor recurrence");
    RecurrenceSpec spec{doc.recurrence->coeffs, doc.recurrence->initial};
    std::vector<RootMultiplicity> roots;
    for (const auto& r : doc.recurrence->roots) roots.push_back({K.element(r.value), r.multiplicity});
    return to_exp_poly(spec, K, roots);
}

SequenceDocument document_from_sequence(const ExpPolySequence& seq)
{
    SequenceDocument doc;
    for (const auto& c : seq.field.defining_poly().coefficients()) doc.defining_poly.push_back(c);
    doc.galois = seq.field.galois_claimed();
    doc.terms.emplace();
    for (const auto& t : seq.terms) {
        TermDoc td{to_coords(t.root), {}};
        for (const auto& c : t.coeffs) td.A.push_back(to_coords(c));
        doc.terms->push_back(std::move(td));
    }
    return doc;
}

SequenceDocument document_from_recurrence(const RecurrenceSpec& spec, const NumberField& field,
                                          const std::vector<RootMultiplicity>& roots)
{
    SequenceDocument doc;
    for (const auto& c : field.defining_poly().coefficients()) doc.defining_poly.push_back(c);
    doc.galois = field.galois_claimed();
    RecurrenceDoc r{spec.coeffs, spec.initial, {}};
    for (const auto& root : roots) r.roots.push_back({to_coords(root.root), root.multiplicity});
    doc.recurrence = std::move(r);
    return doc;
}

} // namespace primezero::io
