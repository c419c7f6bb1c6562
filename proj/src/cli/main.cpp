#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfcsim.h"

namespace {

struct ScenarioDeleter {
    void operator()(lfc_scenario* s) const { lfc_scenario_free(s); }
};
struct ResultDeleter {
    void operator()(lfc_result* r) const { lfc_result_free(r); }
};
using ScenarioPtr = std::unique_ptr<lfc_scenario, ScenarioDeleter>;
using ResultPtr = std::unique_ptr<lfc_result, ResultDeleter>;

// Takes ownership of a C-API string and frees it on scope exit.
std::string take_string(char* text) {
    std::string out = text ? text : "";
    lfc_string_free(text);
    return out;
}

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "simulate: " << msg << "\n";
    std::exit(1);
}

void check(int status, const std::string& context) {
    if (status != LFC_OK) die(context + ": " + lfc_last_error());
}

ScenarioPtr load_scenario(const std::string& name_or_path) {
    lfc_scenario* raw = nullptr;
    if (std::filesystem::exists(name_or_path)) {
        std::ifstream f(name_or_path, std::ios::binary);
        if (!f) die("cannot open scenario file: " + name_or_path);
        std::ostringstream buf;
        buf << f.rdbuf();
        check(lfc_scenario_parse(buf.str().c_str(), &raw),
              "parsing " + name_or_path);
        return ScenarioPtr(raw);
    }
    if (lfc_scenario_preset(name_or_path.c_str(), &raw) == LFC_OK) {
        return ScenarioPtr(raw);
    }
    die("scenario \"" + name_or_path +
        "\" is neither a readable file nor a preset name (try "
        "default, scenario1, scenario2, scenario3, scenario4)");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) die("cannot open for writing: " + path.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) die("write failed: " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-area load-frequency simulation"};

    std::string scenario_arg = "default";
    std::string controller;
    int runs = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double horizon = 0.0;
    bool horizon_set = false;
    std::string out_dir;
    std::vector<std::string> emit = {"timeseries", "summary"};
    bool print_defaults = false;

    app.add_option("--scenario", scenario_arg,
                   "Preset name (default, scenario1..scenario4) or JSON file");
    app.add_option("--controller", controller, "Override: mfc or integrator")
        ->check(CLI::IsMember({"mfc", "integrator"}));
    app.add_option("--runs", runs, "Monte Carlo run count")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    app.add_option("--seed", seed, "Override the base seed");
    app.add_option("--horizon", horizon, "Override the horizon in seconds");
    app.add_option("--out", out_dir, "Directory for output files");
    app.add_option("--emit", emit,
                   "Outputs to write under --out (timeseries, summary, per-run)")
        ->delimiter(',');
    app.add_flag("--print-defaults", print_defaults,
                 "Print resolved defaults and presets as JSON, then exit");

    CLI11_PARSE(app, argc, argv);
    seed_set = app.count("--seed") > 0;
    horizon_set = app.count("--horizon") > 0;

    if (print_defaults) {
        char* text = nullptr;
        check(lfc_defaults_json(&text), "defaults");
        std::cout << take_string(text);
        return 0;
    }

    const std::set<std::string> valid_emits = {"timeseries", "summary", "per-run"};
    for (const auto& e : emit) {
        if (!valid_emits.count(e)) die("unknown --emit value: " + e);
    }

    ScenarioPtr scenario = load_scenario(scenario_arg);
    if (!controller.empty()) {
        check(lfc_scenario_set_controller(scenario.get(), controller.c_str()),
              "controller override");
    }
    if (seed_set) {
        check(lfc_scenario_set_seed(scenario.get(), seed), "seed override");
    }
    if (horizon_set) {
        check(lfc_scenario_set_horizon(scenario.get(), horizon),
              "horizon override");
    }

    lfc_result* raw_result = nullptr;
    check(lfc_run_monte_carlo(scenario.get(), runs, &raw_result), "run");
    ResultPtr result(raw_result);

    char* text = nullptr;
    check(lfc_result_summary_text(result.get(), &text), "summary");
    std::cout << take_string(text);

    if (!out_dir.empty()) {
        std::filesystem::path dir(out_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) die("cannot create output directory: " + dir.string());

        for (const auto& e : emit) {
            char* payload = nullptr;
            if (e == "timeseries") {
                check(lfc_result_timeseries_csv(result.get(), &payload), e);
                write_file(dir / "timeseries.csv", take_string(payload));
            } else if (e == "summary") {
                check(lfc_result_summary_json(result.get(), 0, &payload), e);
                write_file(dir / "summary.json", take_string(payload));
            } else {
                check(lfc_result_per_run_csv(result.get(), &payload), e);
                write_file(dir / "per_run.csv", take_string(payload));
            }
        }
    }
    return 0;
}
