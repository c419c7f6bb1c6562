#pragma once

#include <stdexcept>
#include <string>

namespace lfcsim {

// Configuration text that is not well-formed (syntax, wrong type, unknown key).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed configuration that violates a model invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures, always carrying the path involved.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// estimate_f called before the sliding window has filled.
struct WarmingUp : std::runtime_error {
    WarmingUp() : std::runtime_error("estimator window not yet full") {}
};

// rk4_step called with a step too coarse for the fastest time constant.
struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lfcsim
