#pragma once

// Machine-readable report output: JSON with a stable key order, one CSV row
// per witness, and plot data for limit sequences.

#include <string>
#include <vector>

#include <json.hpp>

#include "fcheck/suite.hpp"

namespace fcheck::verify {

inline constexpr int kReportSchemaVersion = 1;

struct ReportDocument {
    std::string domain;
    std::string target;
    nlohmann::ordered_json config;
    std::vector<PropertyReport> reports;
};

/// {version, domain, target, config, reports}. Non-finite residuals are
/// written as the strings "inf", "-inf" and "nan".
nlohmann::ordered_json to_json(const ReportDocument& doc);
std::string to_json_string(const ReportDocument& doc);
/// Inverse of to_json_string. ParseError on malformed documents.
ReportDocument parse_report_json(const std::string& text);

/// Header plus one row per (property, witness).
std::string to_csv(const std::vector<PropertyReport>& reports);
/// Columns property,series,n,real,imag: one row per point of every attached
/// series (the T(delta_n)(y) sequences of the Dirac limit).
std::string to_plot_csv(const std::vector<PropertyReport>& reports);

/// Writes `contents` to `path`; IoError naming the path on failure.
void write_file(const std::string& path, const std::string& contents);

} // namespace fcheck::verify
