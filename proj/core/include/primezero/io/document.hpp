#ifndef PRIMEZERO_IO_DOCUMENT_HPP
#define PRIMEZERO_IO_DOCUMENT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "primezero/errors.hpp"
#include "primezero/lrs.hpp"

namespace primezero::io {

inline constexpr const char* kSequenceSchema = "primezero.sequence/1";

struct TermDoc {
    std::vector<Rational> lambda;
    std::vector<std::vector<Rational>> A;
    friend bool operator==(const TermDoc&, const TermDoc&) = default;
};

struct RootDoc {
    std::vector<Rational> value;
    unsigned multiplicity = 1;
    friend bool operator==(const RootDoc&, const RootDoc&) = default;
};

struct RecurrenceDoc {
    std::vector<Rational> coeffs;
    std::vector<Rational> initial;
    std::vector<RootDoc> roots;
    friend bool operator==(const RecurrenceDoc&, const RecurrenceDoc&) = default;
};

/// A sequence over a number field, either as exponential-polynomial terms
/// or as a rational recurrence with its roots in the field.
struct SequenceDocument {
    std::vector<mpz_class> defining_poly;
    bool galois = false;
    std::optional<std::vector<TermDoc>> terms;
    std::optional<RecurrenceDoc> recurrence;
    friend bool operator==(const SequenceDocument&, const SequenceDocument&) = default;
};

/// Schema violation; pointer is a JSON pointer to the offending value.
class DocumentError : public InvalidArgument {
public:
    DocumentError(std::string pointer, const std::string& message)
        : InvalidArgument((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer))
    {
    }
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

/// Exact rational from "p", "-p" or "p/q"; anything else throws.
Rational parse_rational(std::string_view text);

SequenceDocument parse_document(std::string_view json_text);
SequenceDocument read_document(const std::filesystem::path& path);

/// Canonical text: fixed key order, exact strings, two-space indent.
std::string serialize_document(const SequenceDocument& doc);

NumberField document_field(const SequenceDocument& doc);
ExpPolySequence to_sequence(const SequenceDocument& doc);

SequenceDocument document_from_sequence(const ExpPolySequence& seq);
SequenceDocument document_from_recurrence(const RecurrenceSpec& spec, const NumberField& field,
                                          const std::vector<RootMultiplicity>& roots);

} // namespace primezero::io

#endif
