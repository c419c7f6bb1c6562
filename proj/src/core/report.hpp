#pragma once

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "engine.hpp"
#include "scenario.hpp"

namespace lfcsim {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

// Header: t,y1,y2,y1_meas,y2_meas,u1,u2,u1_del,u2_del,load1,load2
std::string timeseries_csv(const TimeSeries& ts);

// Header: run,seed,sum_abs_e1,sum_abs_e2,sum_sq_e1,sum_sq_e2,max_abs_e1,max_abs_e2,diverged
std::string per_run_csv(const MonteCarloResult& mc);

nlohmann::json metrics_json(const MetricsReport& m);
nlohmann::json summary_json(const Scenario& s, const MonteCarloResult& mc,
                            bool include_runs = false);

// One line of the human-readable table: identity plus the aggregate metrics.
struct SummaryRow {
    std::string scenario;
    std::string controller;
    MetricsReport aggregate;
    int runs = 1;
    int diverged_count = 0;
};

SummaryRow summary_row(const Scenario& s, const MonteCarloResult& mc);

// Aligned text table, one data row per report, shared header.
std::string summary_table(std::span<const SummaryRow> rows);

// Single-report convenience wrapper around summary_table.
std::string summary_text(const Scenario& s, const MonteCarloResult& mc);

void write_file(const std::string& path, std::string_view content);

}  // namespace lfcsim
