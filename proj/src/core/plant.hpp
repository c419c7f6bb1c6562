#pragma once

#include <array>

namespace lfcsim {

// One control area: governor, turbine, generator/load aggregate.
struct AreaParams {
    double t_gov = 0.05;    // governor time constant, s
    double t_turb = 0.1;    // turbine time constant, s
    double k_ps = 30.0;     // power system gain, Hz/pu
    double t_ps = 5.0;      // power system time constant, s
    double r_droop = 6.7;   // speed droop, Hz/pu
    double bias_b = 0.425;  // frequency bias, pu/Hz
};

struct PlantParams {
    std::array<AreaParams, 2> area{};
    double t12 = 0.545 / 6.283185307179586476925286766559;  // tie-line coefficient, pu/Hz
};

// Deviations from the operating point. dp_tie is stored once, area-1 convention:
// it enters area 1 with + sign and area 2 with - sign.
struct PlantState {
    std::array<double, 2> dp_gov{};   // governor valve position, pu
    std::array<double, 2> dp_turb{};  // turbine output, pu
    std::array<double, 2> df{};       // frequency deviation, Hz
    double dp_tie = 0.0;              // tie-line power deviation, pu
};

enum class OutputKind { ace, df };

// Throws ValidationError on any non-positive parameter.
void validate(const PlantParams& p);

PlantState plant_derivative(const PlantParams& p, const PlantState& x,
                            const std::array<double, 2>& u,
                            const std::array<double, 2>& load);

// Classical fixed-step RK4 with inputs held over the step.
// Throws StepTooLarge unless dt <= min time constant / 5.
PlantState rk4_step(const PlantParams& p, const PlantState& x,
                    const std::array<double, 2>& u,
                    const std::array<double, 2>& load, double dt);

// y_i = ACE_i = bias_b_i*df_i +/- dp_tie (+ for area 1), or df_i when kind is df.
std::array<double, 2> measured_outputs(const PlantParams& p, const PlantState& x,
                                       OutputKind kind = OutputKind::ace);

}  // namespace lfcsim
