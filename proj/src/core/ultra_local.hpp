#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lfcsim {

enum class WarmUpPolicy { zero, hold };

// Trapezoidal discretization of the sliding-window estimate
//   F_est = -(6/tau^3) * integral_0^tau [(tau-2s)*y + alpha*s*(tau-s)*u] ds
// with s the local window coordinate (0 = oldest sample). The effective window
// is tau_eff = (M-1)*h for M = ceil(tau/h)+1 samples. Exact for constant y/u up
// to the quadrature's O(h^2) bias; the newest u sample carries zero weight
// because s*(tau-s) vanishes at the endpoint.
double estimate_f(double alpha, double tau_eff, double h,
                  std::span<const double> y_window,
                  std::span<const double> u_window);

// Proportional control law on the local model y' = F + alpha*u:
//   u = -(f_est - y_ref_rate + kp*(y - y_ref)) / alpha.
double ip_control(double alpha, double kp, double f_est, double e, double y_ref_rate);

// Controller-side state: gains plus the (y, u) window backing the estimator.
// Single-threaded mutable state; one instance per controlled output.
class UltraLocalModel {
public:
    // Requires alpha != 0, kp > 0, tau > 0, sample_period > 0 and
    // tau >= 2*sample_period (at least 3 samples, nondegenerate quadrature).
    // Throws ValidationError otherwise. Window length is fixed after this.
    UltraLocalModel(double alpha, double kp, double tau, double sample_period,
                    WarmUpPolicy warm_up = WarmUpPolicy::zero);

    // One sample period: record y, estimate F, compute the command, record the
    // command into the newest window slot. Returns the warm-up policy output
    // until the window has filled. The recorded u is always the commanded
    // value; whether it survives the actuation path is not this class's story.
    double control_step(double y, double y_ref = 0.0, double y_ref_rate = 0.0);

    // Estimate over the current window. Throws WarmingUp before it fills.
    double estimate() const;

    bool warming_up() const { return count_ < window_len_; }
    std::size_t window_len() const { return window_len_; }
    double tau_eff() const { return tau_eff_; }

private:
    double alpha_;
    double kp_;
    double h_;
    double tau_eff_;
    WarmUpPolicy warm_up_;
    std::size_t window_len_;
    std::size_t count_ = 0;
    double last_u_ = 0.0;
    std::vector<double> ys_;  // oldest first
    std::vector<double> us_;
};

}  // namespace lfcsim
