#pragma once

#include <string>
#include <vector>

#include "dy/suites.hpp"

namespace dy {

constexpr const char* kReportSchema = "dy.report/1";

struct SuiteConfig {
    std::vector<std::string> suites;
    int mode_window = 4;
    int samples = 25;
    std::vector<std::string> spectral_params = {"1", "3", "7"};  // "p/q"
    std::string output_path;                                     // empty: stdout
    std::string catalog_path;                                    // empty: built-in catalog
};

struct ReportSummary {
    int records = 0, passed = 0, failed = 0, expected_failures = 0, unexpected = 0;
    bool ok() const { return unexpected == 0; }
};

struct RunReport {
    SuiteConfig config;
    std::vector<CheckRecord> records;  // sorted by relation_id
    ReportSummary summary;
    double wall_seconds = 0;
};

// Parsed, checked inputs. Throws ConfigError: empty or unknown suite, too few
// samples, window out of range, params not "p/q", zero, repeated or too few.
SuiteInputs validate(const SuiteConfig& c);

RunReport run_suite(const SuiteConfig& c);
ReportSummary summarize(const std::vector<CheckRecord>& records);

enum class ReportFormat { Json, Text };
ReportFormat parse_format(const std::string& s);  // json | text, else ConfigError

// Same report, same bytes. Wall time is left out unless asked for, since it
// differs between runs.
std::string emit_report(const RunReport& r, ReportFormat f, bool with_timing = false);

// 0 every record as expected, 1 otherwise.
int exit_code(const RunReport& r);

}  // namespace dy
