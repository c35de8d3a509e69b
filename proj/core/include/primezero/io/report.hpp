#ifndef PRIMEZERO_IO_REPORT_HPP
#define PRIMEZERO_IO_REPORT_HPP

#include <string>

#include <gmpxx.h>

#include "primezero/skolem.hpp"

namespace primezero::io {

inline constexpr const char* kReportSchema = "primezero.report/1";

/// Machine-readable certificate with a fixed field order. Identical reports
/// serialize to identical bytes.
std::string report_to_json(const DecisionReport& report);

/// Short human-readable rendering of the same report.
std::string report_to_text(const DecisionReport& report);

/// "3.7e509" style summary of an integer with the given significant digits.
std::string scientific(const mpz_class& value, unsigned digits = 2);

} // namespace primezero::io

#endif
