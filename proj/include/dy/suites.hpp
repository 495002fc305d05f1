#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dy/relations.hpp"

namespace dy {

// One line of a report. expect_pass = false marks a documented discrepancy or a
// negative control; the record is fine when pass == expect_pass.
struct CheckRecord {
    std::string relation_id;
    std::string anchor;
    std::string suite;
    bool pass = true;
    bool expect_pass = true;
    int samples = 0;
    std::optional<Counterexample> counterexample;
    std::string note;

    bool ok() const { return pass == expect_pass; }
};

struct SuiteInputs {
    int mode_window = 4;
    int samples = 25;
    std::vector<Rational> params = {1, 3, 7};
    std::vector<RelationSpec> catalog;  // empty: built-in catalog
};

// rtt gauss relations coproduct double pairing serre rmatrix ybe
const std::vector<std::string>& suite_names();

// Records of one suite in a fixed order. Errors thrown by a check become a
// failing record with the error text as note.
std::vector<CheckRecord> run_named_suite(const std::string& name, const SuiteInputs& in);

// Parameters each suite reads from SuiteInputs::params (rtt 1, relations 2, ybe 3, ...).
int params_needed(const std::string& suite);
// Suites that sample spectral values.
bool suite_samples(const std::string& suite);
// Floor on the sample count for sampling suites.
constexpr int kMinSamples = 12;

}  // namespace dy
