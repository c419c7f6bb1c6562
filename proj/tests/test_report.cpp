#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/report.hpp"
#include "core/scenario.hpp"

using namespace lfcsim;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(std::strtod(cell.c_str(), nullptr));
    return out;
}

TimeSeries tiny_series() {
    TimeSeries ts;
    ts.t = {0.0, 0.01, 0.02};
    for (int i = 0; i < 2; ++i) {
        ts.y[i] = {0.1 / 3.0, -0.0, 1e-300};
        ts.y_meas[i] = {0.1, 0.2, 0.3};
        ts.u[i] = {1.0 / 7.0, 12345.6789, -2.5e-8};
        ts.u_del[i] = {0.0, 0.0, 0.0};
        ts.load[i] = {0.01, 0.01, 0.01};
    }
    return ts;
}

}  // namespace

TEST_CASE("doubles print in their shortest round-tripping form") {
    for (double v : {0.1, 1.0 / 3.0, -0.0, 1e-300, 12345.6789, 2.5, -7.25e10}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(2.5) == "2.5");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("timeseries csv has the fixed header and one row per sample") {
    const TimeSeries ts = tiny_series();
    const std::string csv = timeseries_csv(ts);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "t,y1,y2,y1_meas,y2_meas,u1,u2,u1_del,u2_del,load1,load2");

    // full-precision round trip
    for (std::size_t k = 0; k < 3; ++k) {
        const auto row = parse_row(lines[k + 1]);
        REQUIRE(row.size() == 11);
        CHECK(row[0] == ts.t[k]);
        CHECK(row[1] == ts.y[0][k]);
        CHECK(row[2] == ts.y[1][k]);
        CHECK(row[3] == ts.y_meas[0][k]);
        CHECK(row[5] == ts.u[0][k]);
        CHECK(row[6] == ts.u[1][k]);
        CHECK(row[9] == ts.load[0][k]);
    }

    const std::string empty_csv = timeseries_csv(TimeSeries{});
    CHECK(split_lines(empty_csv).size() == 1);
}

TEST_CASE("zero run renders all-zero numeric columns") {
    Scenario s = default_scenario();
    s.load_profile = {{0.0, 0.0, 0.0}};
    s.horizon = 0.05;
    TimeSeries ts;
    run_scenario(s, &ts);
    const auto lines = split_lines(timeseries_csv(ts));
    REQUIRE(lines.size() == 6);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto row = parse_row(lines[k]);
        for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j] == 0.0);
    }
}

TEST_CASE("per-run csv carries one line per seed") {
    Scenario s = preset_scenario("scenario3");
    s.horizon = 5.0;
    s.attack.end = s.horizon;
    const MonteCarloResult mc = run_monte_carlo(s, 3);
    const auto lines = split_lines(per_run_csv(mc));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] ==
          "run,seed,sum_abs_e1,sum_abs_e2,sum_sq_e1,sum_sq_e2,max_abs_e1,max_abs_e2,diverged");
    const auto row = parse_row(lines[1]);
    CHECK(row[0] == 0.0);
    CHECK(row[1] == static_cast<double>(s.base_seed));
    CHECK(row[2] == mc.runs[0].sum_abs_e[0]);
    CHECK(row[8] == 0.0);
}

TEST_CASE("summary json mirrors the aggregate") {
    Scenario s = preset_scenario("scenario1");
    s.horizon = 5.0;
    const MonteCarloResult mc = run_monte_carlo(s, 2);
    const auto j = summary_json(s, mc, true);
    CHECK(j["scenario"] == "scenario1");
    CHECK(j["controller"] == "mfc");
    CHECK(j["runs"] == 2);
    CHECK(j["diverged_count"] == 0);
    CHECK(j["aggregate"]["sum_abs_e"][0] == mc.aggregate.sum_abs_e[0]);
    CHECK(j["per_run"].size() == 2);
    CHECK(j["per_run"][1]["seed"] == s.base_seed + 1);

    const auto no_runs = summary_json(s, mc, false);
    CHECK(!no_runs.contains("per_run"));
}

TEST_CASE("summary table keeps one data row per report under a shared header") {
    Scenario s = preset_scenario("scenario1");
    s.horizon = 5.0;
    const MonteCarloResult mc = run_monte_carlo(s, 1);

    Scenario si = s;
    si.controller = ControllerKind::integrator;
    const MonteCarloResult mci = run_monte_carlo(si, 1);

    const std::vector<SummaryRow> rows = {summary_row(s, mc), summary_row(si, mci)};
    const auto lines = split_lines(summary_table(rows));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].find("sum|e1|") != std::string::npos);
    CHECK(lines[0].find("diverged") != std::string::npos);
    CHECK(lines[1].find("mfc") != std::string::npos);
    CHECK(lines[2].find("integrator") != std::string::npos);

    const auto one = split_lines(summary_text(s, mc));
    CHECK(one.size() == 2);
}

TEST_CASE("file writing round-trips bytes and reports failures with the path") {
    const auto dir = std::filesystem::temp_directory_path() / "lf_report_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.csv").string();
    const std::string payload = "a,b\n1,2\n";
    write_file(path, payload);
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == payload);

    CHECK_THROWS_AS(write_file((dir / "nope" / "out.csv").string(), payload), IoError);
    std::filesystem::remove_all(dir);
}
