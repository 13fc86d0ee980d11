#ifndef BASISLAB_REPORT_IO_HPP
#define BASISLAB_REPORT_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "basislab/constants.hpp"
#include "basislab/harness.hpp"

namespace basislab {

inline constexpr int kReportSchemaVersion = 1;

/// JSON text with stable key order; every wall-clock-derived field lives in
/// the single top-level "timestamp" object, so reports from identical
/// invocations are byte-identical apart from that field.
std::string report_to_json(const SuiteReport& report, bool include_timestamp = true);

void write_text_file(const std::string& path, const std::string& text);

/// Flat CSV of every numeric profile in the report: check,profile,index,value.
std::string report_profiles_csv(const SuiteReport& report);

/// n-indexed CSV of the lambda/phi table inside the report.
std::string report_lambda_csv(const SuiteReport& report);

/// phi-table serializations for the `phi` subcommand.
std::string table_to_csv(const FundamentalTable& t);
std::string table_to_json(const FundamentalTable& t, const SpaceDescriptor& space);

/// Witnesses parsed back from a JSON report, for replay checks.
struct ParsedReport {
    std::string space_text;
    std::string classification_hint;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, Witness>> witnesses; // (check, witness)
};

ParsedReport parse_report_json(const std::string& text);

} // namespace basislab

#endif
