#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attack.hpp"
#include "plant.hpp"
#include "ultra_local.hpp"

namespace lfcsim {

enum class ControllerKind { integrator, mfc };

inline std::string to_string(ControllerKind k) {
    return k == ControllerKind::mfc ? "mfc" : "integrator";
}

// Piecewise-constant load deviation breakpoint: both areas' loads from time t on.
struct LoadBreakpoint {
    double t = 0.0;
    double dp_load_1 = 0.0;
    double dp_load_2 = 0.0;
    friend bool operator==(const LoadBreakpoint&, const LoadBreakpoint&) = default;
};

struct Scenario {
    std::string name = "default";
    ControllerKind controller = ControllerKind::mfc;

    // mfc gains
    double alpha = 10.0;
    double kp = 0.3;
    double tau = 0.3;
    WarmUpPolicy warm_up = WarmUpPolicy::zero;

    // integrator gains, one per area
    double k1 = 1.0;
    double k2 = 1.0;

    OutputKind output = OutputKind::ace;
    PlantParams plant{};
    std::vector<LoadBreakpoint> load_profile;
    AttackSchedule attack{};

    double horizon = 100.0;
    double dt = 0.01;
    std::uint64_t base_seed = 12345;
};

// The nominal setup every preset starts from (scenario1 equals it by another name).
Scenario default_scenario();

// "default"/"scenario1" (nominal), "scenario2" (load-altering attack),
// "scenario3" (actuation DoS), "scenario4" (measurement DoS).
// Throws ValidationError for any other name.
Scenario preset_scenario(const std::string& name);
bool is_preset_name(const std::string& name);

// Strict parse: unknown keys and type mismatches are ParseError; invariant
// violations are ValidationError. Missing keys fall back to defaults.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& s);

// Document with the resolved defaults plus all four presets.
std::string defaults_document();

void validate(const Scenario& s);

// Scheduled loads at time t (without any attack contribution).
std::array<double, 2> load_at(const std::vector<LoadBreakpoint>& profile, double t);

}  // namespace lfcsim
