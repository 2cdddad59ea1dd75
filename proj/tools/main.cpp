#include "fplab/scenario.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

// Exit codes: 0 ran to completion, 1 infrastructure error (unreadable file,
// unwritable output), 2 scenario parse/validation error, 3 hypothesis FAIL
// under --strict.
constexpr int kExitOk = 0;
constexpr int kExitInfra = 1;
constexpr int kExitParse = 2;
constexpr int kExitStrict = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// `run` accepts either a path to a scenario file or a corpus name.
std::string resolve_text(const std::string& target) {
    if (std::filesystem::exists(target)) return read_file(target);
    return fplab::corpus_text(target);
}

int report_parse_error(const std::string& what, const fplab::ScenarioError& e) {
    std::cerr << "error: " << what;
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.col;
    std::cerr << ": " << e.what() << "\n";
    return kExitParse;
}

bool any_hypothesis_failure(const nlohmann::json& report) {
    for (const auto& c : report["checks"])
        if (c["verdict"] == "FAIL") return true;
    if (report.contains("solver") && !report["solver"].is_null() &&
        report["solver"]["cauchy"] == "FAIL")
        return true;
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fplab: fixed-point hypothesis laboratory for E-distances"};
    app.require_subcommand(1);

    std::string target;
    fplab::RunOptions opt;
    double tol = 0.0;
    int n_max = 0, grid = 0;
    std::uint64_t seed = 0;
    std::string json_out;
    bool quiet = false, strict = false;

    CLI::App* run = app.add_subcommand("run", "run a scenario file or built-in corpus scenario");
    run->add_option("target", target, "scenario file path, or corpus name")->required();
    run->add_option("--tol", tol, "override the scenario tolerance");
    run->add_option("--n-max", n_max, "override the iteration depth n_max");
    run->add_option("--grid", grid, "override the sampler point count");
    run->add_option("--seed", seed, "switch the sampler to seeded-random with this seed");
    run->add_option("--json-out", json_out, "write the JSON report to this path");
    run->add_flag("--quiet", quiet, "suppress the report on stdout");
    run->add_flag("--strict", strict, "exit 3 if any requested check FAILs");
    run->add_flag("--timings", opt.timings, "include wall-clock timing in the report");

    CLI::App* list = app.add_subcommand("list", "list built-in corpus scenarios");

    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "parse and validate a scenario file");
    check->add_option("file", check_path, "scenario file path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const std::string& name : fplab::corpus_list()) std::cout << name << "\n";
            return kExitOk;
        }

        if (check->parsed()) {
            std::string text;
            try {
                text = read_file(check_path);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInfra;
            }
            try {
                fplab::Scenario s = fplab::parse_scenario(text);
                std::cout << "ok: scenario '" << s.name << "' (" << s.checks.size()
                          << " checks)\n";
                return kExitOk;
            } catch (const fplab::ScenarioError& e) {
                return report_parse_error(check_path, e);
            }
        }

        // run
        std::string text;
        try {
            text = resolve_text(target);
        } catch (const fplab::ScenarioError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInfra;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInfra;
        }

        fplab::Scenario s;
        try {
            s = fplab::parse_scenario(text);
        } catch (const fplab::ScenarioError& e) {
            return report_parse_error(target, e);
        }

        if (run->count("--tol")) opt.tol = tol;
        if (run->count("--n-max")) opt.n_max = n_max;
        if (run->count("--grid")) opt.grid_count = grid;
        if (run->count("--seed")) opt.seed = seed;

        nlohmann::json report = fplab::run_scenario(s, opt);
        std::string out = fplab::report_to_string(report);

        if (!json_out.empty()) {
            std::ofstream os(json_out, std::ios::binary);
            if (!os) {
                std::cerr << "error: cannot write '" << json_out << "'\n";
                return kExitInfra;
            }
            os << out;
        }
        if (!quiet) std::cout << out;

        if (strict && any_hypothesis_failure(report)) return kExitStrict;
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfra;
    }
}
