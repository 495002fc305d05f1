#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dy/errors.hpp"
#include "dy/parallel.hpp"
#include "dy/report.hpp"

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

void apply_thread_env() {
    const char* v = std::getenv("DY_THREADS");
    if (!v || !*v) return;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end || n < 1 || n > 1024) throw dy::ConfigError(std::string("DY_THREADS must be a positive integer, got '") + v + "'");
    dy::set_thread_count(static_cast<int>(n));
    if (n == 1) dy::set_default_exec(dy::Exec::Serial);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites; writes a json or text report"};
    std::string suites, params = "1,3,7", format = "json";
    dy::SuiteConfig cfg;
    bool dump_catalog = false, timing = false;
    app.add_option("--suite", suites, "comma list of rtt,gauss,relations,coproduct,double,pairing,serre,rmatrix,ybe or all");
    app.add_option("--mode-window", cfg.mode_window, "mode window K")->capture_default_str();
    app.add_option("--samples", cfg.samples, "samples per sampled check")->capture_default_str();
    app.add_option("--params", params, "spectral parameters as p/q, comma separated")->capture_default_str();
    app.add_option("--out", cfg.output_path, "report file (default stdout)");
    app.add_option("--format", format, "json or text")->capture_default_str();
    app.add_option("--catalog", cfg.catalog_path, "relation catalog json (default built-in)");
    app.add_flag("--dump-catalog", dump_catalog, "print the built-in catalog as json and exit");
    app.add_flag("--timing", timing, "include wall time in the report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        apply_thread_env();
        if (dump_catalog) {
            std::cout << dy::catalog_to_json(dy::relation_catalog());
            return 0;
        }
        cfg.suites = suites == "all" ? dy::suite_names() : split(suites);
        cfg.spectral_params = split(params);
        dy::ReportFormat fmt = dy::parse_format(format);
        dy::RunReport r = dy::run_suite(cfg);
        std::string bytes = dy::emit_report(r, fmt, timing);
        if (cfg.output_path.empty()) {
            std::cout << bytes;
        } else {
            std::ofstream out(cfg.output_path, std::ios::binary);
            if (!out) throw dy::ConfigError("cannot write '" + cfg.output_path + "'");
            out << bytes;
        }
        std::cerr << r.summary.records << " records, " << r.summary.unexpected << " unexpected, " << r.wall_seconds
                  << " s\n";
        return dy::exit_code(r);
    } catch (const dy::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
