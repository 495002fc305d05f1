#include "dy/report.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "dy/errors.hpp"

namespace dy {

namespace {

using ordered_json = nlohmann::ordered_json;

bool known_suite(const std::string& s) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), s) != n.end();
}

// Canonical order of suite_names(), duplicates dropped.
std::vector<std::string> canonical_suites(const std::vector<std::string>& in) {
    std::vector<std::string> out;
    for (const auto& n : suite_names())
        if (std::find(in.begin(), in.end(), n) != in.end()) out.push_back(n);
    return out;
}

const char* label(const CheckRecord& r) {
    if (r.pass) return r.expect_pass ? "PASS" : "XPASS";
    return r.expect_pass ? "FAIL" : "XFAIL";
}

}  // namespace

SuiteInputs validate(const SuiteConfig& c) {
    if (c.suites.empty()) throw ConfigError("no suites selected");
    for (const auto& s : c.suites)
        if (!known_suite(s)) throw ConfigError("unknown suite '" + s + "'");
    if (c.mode_window < 1 || c.mode_window > 8) throw ConfigError("mode window must be in 1..8");
    SuiteInputs in;
    in.mode_window = c.mode_window;
    in.samples = c.samples;
    in.params.clear();
    for (const auto& p : c.spectral_params) {
        Rational x;
        try {
            x = parse_rational(p);
        } catch (const std::exception& e) {
            throw ConfigError("spectral parameter '" + p + "': " + e.what());
        }
        if (x == 0) throw ConfigError("spectral parameters must be nonzero");
        if (std::find(in.params.begin(), in.params.end(), x) != in.params.end())
            throw ConfigError("spectral parameters must be pairwise distinct");
        in.params.push_back(x);
    }
    for (const auto& s : canonical_suites(c.suites)) {
        if (static_cast<int>(in.params.size()) < params_needed(s))
            throw ConfigError("suite " + s + " needs " + std::to_string(params_needed(s)) + " spectral parameters");
        if (suite_samples(s) && c.samples < kMinSamples)
            throw ConfigError("suite " + s + " needs at least " + std::to_string(kMinSamples) + " samples");
    }
    if (c.samples > 1000) throw ConfigError("samples must be at most 1000");
    if (!c.catalog_path.empty()) {
        try {
            in.catalog = load_catalog(c.catalog_path);
        } catch (const std::exception& e) {
            throw ConfigError("catalog '" + c.catalog_path + "': " + e.what());
        }
        if (in.catalog.empty()) throw ConfigError("catalog '" + c.catalog_path + "' has no records");
    }
    return in;
}

ReportSummary summarize(const std::vector<CheckRecord>& records) {
    ReportSummary s;
    for (const auto& r : records) {
        ++s.records;
        (r.pass ? s.passed : s.failed) += 1;
        if (!r.pass && !r.expect_pass) ++s.expected_failures;
        if (!r.ok()) ++s.unexpected;
    }
    return s;
}

RunReport run_suite(const SuiteConfig& c) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteInputs in = validate(c);
    RunReport r;
    r.config = c;
    r.config.suites = canonical_suites(c.suites);
    r.config.spectral_params.clear();
    for (const auto& p : in.params) r.config.spectral_params.push_back(p.get_str());
    for (const auto& s : r.config.suites) {
        std::vector<CheckRecord> recs;
        try {
            recs = run_named_suite(s, in);
        } catch (const std::exception& e) {
            // setup outside any single check failed
            CheckRecord x;
            x.relation_id = s + ".setup";
            x.suite = s;
            x.pass = false;
            x.note = e.what();
            recs = {x};
        }
        r.records.insert(r.records.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
    }
    std::stable_sort(r.records.begin(), r.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.relation_id < b.relation_id; });
    r.summary = summarize(r.records);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "text") return ReportFormat::Text;
    throw ConfigError("format must be json or text, got '" + s + "'");
}

std::string emit_report(const RunReport& r, ReportFormat f, bool with_timing) {
    const ReportSummary& s = r.summary;
    const SuiteConfig& c = r.config;
    if (f == ReportFormat::Text) {
        std::ostringstream os;
        os << "schema " << kReportSchema << "\n";
        os << "suites";
        for (const auto& x : c.suites) os << " " << x;
        os << "\nmode_window " << c.mode_window << "\nsamples " << c.samples << "\nparams";
        for (const auto& p : c.spectral_params) os << " " << p;
        os << "\ncatalog " << (c.catalog_path.empty() ? "builtin" : c.catalog_path) << "\n\n";
        for (const auto& x : r.records) {
            os << label(x) << " " << x.relation_id << " samples=" << x.samples << "\n";
            if (x.counterexample) {
                os << "  at " << x.counterexample->point << "\n";
                os << "  lhs " << x.counterexample->lhs << "\n";
                os << "  rhs " << x.counterexample->rhs << "\n";
            }
            if (!x.note.empty() && !x.ok()) os << "  note " << x.note << "\n";
        }
        os << "\nrecords " << s.records << " pass " << s.passed << " fail " << s.failed << " expected_fail "
           << s.expected_failures << " unexpected " << s.unexpected << "\n";
        if (with_timing) os << "wall_seconds " << r.wall_seconds << "\n";
        os << (s.ok() ? "OK" : "NOT OK") << "\n";
        return os.str();
    }
    ordered_json j;
    j["schema"] = kReportSchema;
    ordered_json cfg;
    cfg["suites"] = c.suites;
    cfg["mode_window"] = c.mode_window;
    cfg["samples"] = c.samples;
    cfg["params"] = c.spectral_params;
    cfg["catalog"] = c.catalog_path.empty() ? ordered_json(nullptr) : ordered_json(c.catalog_path);
    j["config"] = cfg;
    ordered_json recs = ordered_json::array();
    for (const auto& x : r.records) {
        ordered_json e;
        e["relation_id"] = x.relation_id;
        e["anchor"] = x.anchor;
        e["suite"] = x.suite;
        e["status"] = x.pass ? "pass" : "fail";
        e["expect"] = x.expect_pass ? "pass" : "fail";
        e["ok"] = x.ok();
        e["samples"] = x.samples;
        if (x.counterexample)
            e["counterexample"] = {{"point", x.counterexample->point},
                                   {"lhs", x.counterexample->lhs},
                                   {"rhs", x.counterexample->rhs}};
        else
            e["counterexample"] = nullptr;
        e["note"] = x.note;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    j["summary"] = {{"records", s.records},
                    {"pass", s.passed},
                    {"fail", s.failed},
                    {"expected_fail", s.expected_failures},
                    {"unexpected", s.unexpected},
                    {"ok", s.ok()}};
    if (with_timing) j["wall_seconds"] = r.wall_seconds;
    return j.dump(2) + "\n";
}

int exit_code(const RunReport& r) { return r.summary.ok() ? 0 : 1; }

}  // namespace dy
