#pragma once

#include "errors.hpp"

namespace lfcsim {

// Pure discrete integrator K/s, forward Euler, acting as negative feedback:
// accumulator += gain * e * dt each step, command is -accumulator.
class IntegratorController {
public:
    IntegratorController(double gain, double sample_period)
        : gain_(gain), h_(sample_period) {
        if (!(sample_period > 0.0))
            throw ValidationError("sample_period must be > 0");
    }

    double step(double e) {
        acc_ += gain_ * e * h_;
        return -acc_;
    }

    double accumulator() const { return acc_; }

private:
    double gain_;
    double h_;
    double acc_ = 0.0;
};

}  // namespace lfcsim
