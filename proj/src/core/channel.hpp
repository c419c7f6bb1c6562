#pragma once

#include <cstdint>
#include <random>

#include "errors.hpp"
#include "rng.hpp"

namespace lfcsim {

enum class HoldPolicy { hold_last, zero };

// Point-to-point link that drops packets with probability loss_prob while
// active. Exactly one pseudorandom draw is consumed per transmit call, active
// or not, so toggling the attack never shifts the stream.
class LossyChannel {
public:
    LossyChannel(double loss_prob, HoldPolicy policy, std::uint64_t seed)
        : p_(loss_prob), policy_(policy), eng_(seed) {
        if (!(loss_prob >= 0.0 && loss_prob <= 1.0))
            throw ValidationError("loss_prob must be in [0, 1]");
    }

    double transmit(double value, bool active) {
        const double r = uniform01(eng_);
        if (active && r < p_)
            return policy_ == HoldPolicy::hold_last ? last_delivered_ : 0.0;
        last_delivered_ = value;
        return value;
    }

private:
    double p_;
    HoldPolicy policy_;
    std::mt19937_64 eng_;
    double last_delivered_ = 0.0;
};

}  // namespace lfcsim
