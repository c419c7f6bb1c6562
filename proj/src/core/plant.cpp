#include "plant.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace lfcsim {

void validate(const PlantParams& p) {
    auto need_positive = [](double v, const std::string& name) {
        if (!(v > 0.0)) throw ValidationError(name + " must be > 0");
    };
    for (int i = 0; i < 2; ++i) {
        const AreaParams& a = p.area[i];
        const std::string s = "area" + std::to_string(i + 1) + ".";
        need_positive(a.t_gov, s + "t_gov");
        need_positive(a.t_turb, s + "t_turb");
        need_positive(a.k_ps, s + "k_ps");
        need_positive(a.t_ps, s + "t_ps");
        need_positive(a.r_droop, s + "r_droop");
        need_positive(a.bias_b, s + "bias_b");
    }
    need_positive(p.t12, "t12");
}

PlantState plant_derivative(const PlantParams& p, const PlantState& x,
                            const std::array<double, 2>& u,
                            const std::array<double, 2>& load) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    PlantState d;
    for (int i = 0; i < 2; ++i) {
        const AreaParams& a = p.area[i];
        const double tie = (i == 0) ? x.dp_tie : -x.dp_tie;
        d.dp_gov[i] = (u[i] - x.df[i] / a.r_droop - x.dp_gov[i]) / a.t_gov;
        d.dp_turb[i] = (x.dp_gov[i] - x.dp_turb[i]) / a.t_turb;
        d.df[i] = (a.k_ps / a.t_ps) * (x.dp_turb[i] - load[i] - tie) - x.df[i] / a.t_ps;
    }
    d.dp_tie = two_pi * p.t12 * (x.df[0] - x.df[1]);
    return d;
}

namespace {

PlantState axpy(const PlantState& x, double h, const PlantState& d) {
    PlantState r;
    for (int i = 0; i < 2; ++i) {
        r.dp_gov[i] = x.dp_gov[i] + h * d.dp_gov[i];
        r.dp_turb[i] = x.dp_turb[i] + h * d.dp_turb[i];
        r.df[i] = x.df[i] + h * d.df[i];
    }
    r.dp_tie = x.dp_tie + h * d.dp_tie;
    return r;
}

}  // namespace

PlantState rk4_step(const PlantParams& p, const PlantState& x,
                    const std::array<double, 2>& u,
                    const std::array<double, 2>& load, double dt) {
    double tc_min = p.area[0].t_gov;
    for (const AreaParams& a : p.area)
        tc_min = std::min({tc_min, a.t_gov, a.t_turb, a.t_ps});
    if (!(dt > 0.0) || dt > tc_min / 5.0)
        throw StepTooLarge("dt must satisfy 0 < dt <= " + std::to_string(tc_min / 5.0));

    const PlantState k1 = plant_derivative(p, x, u, load);
    const PlantState k2 = plant_derivative(p, axpy(x, dt / 2.0, k1), u, load);
    const PlantState k3 = plant_derivative(p, axpy(x, dt / 2.0, k2), u, load);
    const PlantState k4 = plant_derivative(p, axpy(x, dt, k3), u, load);

    PlantState r = x;
    for (int i = 0; i < 2; ++i) {
        r.dp_gov[i] += dt / 6.0 * (k1.dp_gov[i] + 2 * k2.dp_gov[i] + 2 * k3.dp_gov[i] + k4.dp_gov[i]);
        r.dp_turb[i] += dt / 6.0 * (k1.dp_turb[i] + 2 * k2.dp_turb[i] + 2 * k3.dp_turb[i] + k4.dp_turb[i]);
        r.df[i] += dt / 6.0 * (k1.df[i] + 2 * k2.df[i] + 2 * k3.df[i] + k4.df[i]);
    }
    r.dp_tie += dt / 6.0 * (k1.dp_tie + 2 * k2.dp_tie + 2 * k3.dp_tie + k4.dp_tie);
    return r;
}

std::array<double, 2> measured_outputs(const PlantParams& p, const PlantState& x,
                                       OutputKind kind) {
    if (kind == OutputKind::df) return {x.df[0], x.df[1]};
    return {p.area[0].bias_b * x.df[0] + x.dp_tie,
            p.area[1].bias_b * x.df[1] - x.dp_tie};
}

}  // namespace lfcsim
