#include "report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "errors.hpp"

namespace lfcsim {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string timeseries_csv(const TimeSeries& ts) {
    std::string out = "t,y1,y2,y1_meas,y2_meas,u1,u2,u1_del,u2_del,load1,load2\n";
    const std::size_t n = ts.t.size();
    for (std::size_t k = 0; k < n; ++k) {
        out += format_double(ts.t[k]);
        const double row[] = {ts.y[0][k],     ts.y[1][k],     ts.y_meas[0][k],
                              ts.y_meas[1][k], ts.u[0][k],     ts.u[1][k],
                              ts.u_del[0][k],  ts.u_del[1][k], ts.load[0][k],
                              ts.load[1][k]};
        for (double v : row) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::string per_run_csv(const MonteCarloResult& mc) {
    std::string out =
        "run,seed,sum_abs_e1,sum_abs_e2,sum_sq_e1,sum_sq_e2,max_abs_e1,max_abs_e2,diverged\n";
    for (std::size_t k = 0; k < mc.runs.size(); ++k) {
        const MetricsReport& r = mc.runs[k];
        out += std::to_string(k);
        out += ',';
        out += std::to_string(r.seed);
        for (double v : {r.sum_abs_e[0], r.sum_abs_e[1], r.sum_sq_e[0],
                         r.sum_sq_e[1], r.max_abs_e[0], r.max_abs_e[1]}) {
            out += ',';
            out += format_double(v);
        }
        out += r.diverged ? ",1\n" : ",0\n";
    }
    return out;
}

nlohmann::json metrics_json(const MetricsReport& m) {
    return nlohmann::json{{"sum_abs_e", m.sum_abs_e},
                          {"sum_sq_e", m.sum_sq_e},
                          {"max_abs_e", m.max_abs_e},
                          {"diverged", m.diverged},
                          {"seed", m.seed}};
}

nlohmann::json summary_json(const Scenario& s, const MonteCarloResult& mc,
                            bool include_runs) {
    nlohmann::json j{{"scenario", s.name},
                     {"controller", to_string(s.controller)},
                     {"runs", mc.runs.size()},
                     {"base_seed", s.base_seed},
                     {"horizon", s.horizon},
                     {"dt", s.dt},
                     {"diverged_count", mc.diverged_count},
                     {"aggregate",
                      {{"sum_abs_e", mc.aggregate.sum_abs_e},
                       {"sum_sq_e", mc.aggregate.sum_sq_e},
                       {"max_abs_e", mc.aggregate.max_abs_e}}}};
    if (include_runs) {
        auto arr = nlohmann::json::array();
        for (const auto& r : mc.runs) arr.push_back(metrics_json(r));
        j["per_run"] = std::move(arr);
    }
    return j;
}

SummaryRow summary_row(const Scenario& s, const MonteCarloResult& mc) {
    return {s.name, to_string(s.controller), mc.aggregate,
            static_cast<int>(mc.runs.size()), mc.diverged_count};
}

std::string summary_table(std::span<const SummaryRow> rows) {
    char line[200];
    std::snprintf(line, sizeof(line), "%-14s%-12s%6s%14s%14s%14s%14s%10s\n",
                  "scenario", "controller", "runs", "sum|e1|", "sum e1^2",
                  "sum|e2|", "sum e2^2", "diverged");
    std::string out = line;
    for (const SummaryRow& r : rows) {
        std::snprintf(line, sizeof(line),
                      "%-14s%-12s%6d%14.6g%14.6g%14.6g%14.6g%10d\n",
                      r.scenario.c_str(), r.controller.c_str(), r.runs,
                      r.aggregate.sum_abs_e[0], r.aggregate.sum_sq_e[0],
                      r.aggregate.sum_abs_e[1], r.aggregate.sum_sq_e[1],
                      r.diverged_count);
        out += line;
    }
    return out;
}

std::string summary_text(const Scenario& s, const MonteCarloResult& mc) {
    const SummaryRow row = summary_row(s, mc);
    return summary_table({&row, 1});
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace lfcsim
