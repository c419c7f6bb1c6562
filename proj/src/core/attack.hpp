#pragma once

#include "channel.hpp"

namespace lfcsim {

enum class AttackType { none, load_altering, dos_actuation, dos_measurement };

struct AttackSchedule {
    AttackType type = AttackType::none;
    double start = 0.0;  // s, inclusive
    double end = 0.0;    // s, exclusive
    double magnitude = 0.0;                       // pu, load_altering only
    double loss_prob = 0.0;                       // DoS only
    int target_area = 2;                          // 1 or 2
    HoldPolicy hold_policy = HoldPolicy::hold_last;  // DoS receiver behavior

    bool active_at(double t) const {
        return type != AttackType::none && t >= start && t < end;
    }
};

// Additive load injected into the target area while a load-altering attack is
// in its window; zero otherwise.
inline double load_attack(const AttackSchedule& s, double t) {
    if (s.type != AttackType::load_altering) return 0.0;
    return s.active_at(t) ? s.magnitude : 0.0;
}

}  // namespace lfcsim
