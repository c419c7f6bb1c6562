#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "scenario.hpp"

namespace lfcsim {

// Per-run tracking-error aggregates, summed over samples (no dt weighting).
// A diverged run keeps the metrics accumulated up to the divergence point.
struct MetricsReport {
    std::array<double, 2> sum_abs_e{};
    std::array<double, 2> sum_sq_e{};
    std::array<double, 2> max_abs_e{};
    bool diverged = false;
    std::uint64_t seed = 0;
};

struct TimeSeries {
    std::vector<double> t;
    std::array<std::vector<double>, 2> y;       // true plant output
    std::array<std::vector<double>, 2> y_meas;  // after the measurement channel
    std::array<std::vector<double>, 2> u;       // commanded control
    std::array<std::vector<double>, 2> u_del;   // after the actuation channel
    std::array<std::vector<double>, 2> load;    // scheduled + attack load
};

struct MonteCarloResult {
    MetricsReport aggregate;  // per-metric mean over runs, accumulated in seed order
    int diverged_count = 0;
    std::vector<MetricsReport> runs;
};

MetricsReport compute_metrics(std::span<const double> e1, std::span<const double> e2);

// Closed loop over the scenario horizon with the scenario's base seed.
// Metrics are computed from the TRUE plant output; the controllers only ever
// see what the measurement channels deliver. ts, when given, receives one row
// per sample. Divergence (any state beyond 1e9 or non-finite) truncates the
// run and sets the flag; it is not an error.
MetricsReport run_scenario(const Scenario& s, TimeSeries* ts = nullptr);
MetricsReport run_scenario_seeded(const Scenario& s, std::uint64_t seed,
                                  TimeSeries* ts = nullptr);

// n_runs independent runs seeded base_seed + k, k = 0..n_runs-1; the aggregate
// is accumulated in seed order so it does not depend on execution order.
MonteCarloResult run_monte_carlo(const Scenario& s, int n_runs);

}  // namespace lfcsim
