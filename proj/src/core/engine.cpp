#include "engine.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>

#include "attack.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "integrator.hpp"
#include "plant.hpp"
#include "rng.hpp"
#include "ultra_local.hpp"

namespace lfcsim {

namespace {

constexpr double kDivergenceBound = 1e9;

// Channel stream ids; fixed so a run is reproducible from its seed alone.
constexpr std::uint64_t kStreamMeas[2] = {1, 2};
constexpr std::uint64_t kStreamAct[2] = {3, 4};

bool state_diverged(const PlantState& x) {
    const double vals[] = {x.dp_gov[0],  x.dp_gov[1], x.dp_turb[0], x.dp_turb[1],
                           x.df[0],      x.df[1],     x.dp_tie};
    for (double v : vals) {
        if (!std::isfinite(v) || std::abs(v) > kDivergenceBound) return true;
    }
    return false;
}

// Uniform controller front so the loop body does not branch on the kind.
class ControlLaw {
  public:
    virtual ~ControlLaw() = default;
    virtual double step(double y_meas) = 0;
};

class IntegratorLaw final : public ControlLaw {
  public:
    IntegratorLaw(double gain, double h) : ctl_(gain, h) {}
    double step(double y_meas) override { return ctl_.step(y_meas); }

  private:
    IntegratorController ctl_;
};

class UltraLocalLaw final : public ControlLaw {
  public:
    UltraLocalLaw(const Scenario& s, double h)
        : ctl_(s.alpha, s.kp, s.tau, h, s.warm_up) {}
    double step(double y_meas) override { return ctl_.control_step(y_meas); }

  private:
    UltraLocalModel ctl_;
};

std::unique_ptr<ControlLaw> make_law(const Scenario& s, int area) {
    if (s.controller == ControllerKind::integrator) {
        return std::make_unique<IntegratorLaw>(area == 0 ? s.k1 : s.k2, s.dt);
    }
    return std::make_unique<UltraLocalLaw>(s, s.dt);
}

}  // namespace

MetricsReport compute_metrics(std::span<const double> e1,
                              std::span<const double> e2) {
    MetricsReport m;
    const std::span<const double> errs[2] = {e1, e2};
    for (int i = 0; i < 2; ++i) {
        for (double e : errs[i]) {
            const double a = std::abs(e);
            m.sum_abs_e[i] += a;
            m.sum_sq_e[i] += e * e;
            if (a > m.max_abs_e[i]) m.max_abs_e[i] = a;
        }
    }
    return m;
}

MetricsReport run_scenario(const Scenario& s, TimeSeries* ts) {
    return run_scenario_seeded(s, s.base_seed, ts);
}

MetricsReport run_scenario_seeded(const Scenario& s, std::uint64_t seed,
                                  TimeSeries* ts) {
    validate(s);

    const AttackSchedule& atk = s.attack;
    const int target = atk.target_area - 1;

    // Every channel exists and draws every step regardless of the schedule,
    // so adding or removing an attack does not shift the other streams.
    auto channel_p = [&](AttackType kind, int area) {
        return (atk.type == kind && target == area) ? atk.loss_prob : 0.0;
    };
    LossyChannel meas_ch[2] = {
        {channel_p(AttackType::dos_measurement, 0), atk.hold_policy,
         stream_seed(seed, kStreamMeas[0])},
        {channel_p(AttackType::dos_measurement, 1), atk.hold_policy,
         stream_seed(seed, kStreamMeas[1])}};
    LossyChannel act_ch[2] = {
        {channel_p(AttackType::dos_actuation, 0), atk.hold_policy,
         stream_seed(seed, kStreamAct[0])},
        {channel_p(AttackType::dos_actuation, 1), atk.hold_policy,
         stream_seed(seed, kStreamAct[1])}};

    std::unique_ptr<ControlLaw> law[2] = {make_law(s, 0), make_law(s, 1)};

    const auto n_steps = static_cast<long>(std::llround(s.horizon / s.dt));
    if (ts) {
        ts->t.clear();
        ts->t.reserve(static_cast<std::size_t>(n_steps));
        for (int i = 0; i < 2; ++i) {
            for (auto* col : {&ts->y[i], &ts->y_meas[i], &ts->u[i],
                              &ts->u_del[i], &ts->load[i]}) {
                col->clear();
                col->reserve(static_cast<std::size_t>(n_steps));
            }
        }
    }

    MetricsReport m;
    m.seed = seed;
    PlantState x{};

    for (long k = 0; k < n_steps; ++k) {
        const double t = static_cast<double>(k) * s.dt;
        const bool window = atk.active_at(t);

        const auto y_true = measured_outputs(s.plant, x, s.output);

        double y_meas[2], u[2], u_del[2];
        for (int i = 0; i < 2; ++i) {
            const bool meas_on = window &&
                                 atk.type == AttackType::dos_measurement &&
                                 target == i;
            y_meas[i] = meas_ch[i].transmit(y_true[i], meas_on);
            u[i] = law[i]->step(y_meas[i]);
            const bool act_on = window &&
                                atk.type == AttackType::dos_actuation &&
                                target == i;
            u_del[i] = act_ch[i].transmit(u[i], act_on);
        }

        auto loads = load_at(s.load_profile, t);
        if (atk.type == AttackType::load_altering) {
            loads[target] += load_attack(atk, t);
        }

        for (int i = 0; i < 2; ++i) {
            const double e = y_true[i];
            const double a = std::abs(e);
            m.sum_abs_e[i] += a;
            m.sum_sq_e[i] += e * e;
            if (a > m.max_abs_e[i]) m.max_abs_e[i] = a;
        }

        if (ts) {
            ts->t.push_back(t);
            for (int i = 0; i < 2; ++i) {
                ts->y[i].push_back(y_true[i]);
                ts->y_meas[i].push_back(y_meas[i]);
                ts->u[i].push_back(u[i]);
                ts->u_del[i].push_back(u_del[i]);
                ts->load[i].push_back(loads[i]);
            }
        }

        x = rk4_step(s.plant, x, {u_del[0], u_del[1]}, loads, s.dt);
        if (state_diverged(x)) {
            m.diverged = true;
            break;
        }
    }
    return m;
}

MonteCarloResult run_monte_carlo(const Scenario& s, int n_runs) {
    if (n_runs <= 0) throw ValidationError("n_runs must be positive");
    MonteCarloResult out;
    out.runs.reserve(static_cast<std::size_t>(n_runs));

    for (int k = 0; k < n_runs; ++k) {
        const MetricsReport r = run_scenario_seeded(s, s.base_seed + static_cast<std::uint64_t>(k));
        for (int i = 0; i < 2; ++i) {
            out.aggregate.sum_abs_e[i] += r.sum_abs_e[i];
            out.aggregate.sum_sq_e[i] += r.sum_sq_e[i];
            out.aggregate.max_abs_e[i] += r.max_abs_e[i];
        }
        if (r.diverged) ++out.diverged_count;
        out.runs.push_back(r);
    }
    for (int i = 0; i < 2; ++i) {
        out.aggregate.sum_abs_e[i] /= n_runs;
        out.aggregate.sum_sq_e[i] /= n_runs;
        out.aggregate.max_abs_e[i] /= n_runs;
    }
    out.aggregate.diverged = out.diverged_count > 0;
    out.aggregate.seed = s.base_seed;
    return out;
}

}  // namespace lfcsim
