#include "ultra_local.hpp"

#include <cmath>
#include <cstring>

#include "errors.hpp"

namespace lfcsim {

double estimate_f(double alpha, double tau_eff, double h,
                  std::span<const double> y_window,
                  std::span<const double> u_window) {
    const std::size_t m = y_window.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double sigma = static_cast<double>(j) * h;
        const double cj = (j == 0 || j == m - 1) ? 0.5 : 1.0;
        acc += cj * ((tau_eff - 2.0 * sigma) * y_window[j] +
                     alpha * sigma * (tau_eff - sigma) * u_window[j]);
    }
    return -(6.0 / (tau_eff * tau_eff * tau_eff)) * acc * h;
}

double ip_control(double alpha, double kp, double f_est, double e, double y_ref_rate) {
    return -(f_est - y_ref_rate + kp * e) / alpha;
}

UltraLocalModel::UltraLocalModel(double alpha, double kp, double tau,
                                 double sample_period, WarmUpPolicy warm_up)
    : alpha_(alpha), kp_(kp), h_(sample_period), warm_up_(warm_up) {
    if (alpha == 0.0) throw ValidationError("alpha must be nonzero");
    if (!(kp > 0.0)) throw ValidationError("kp must be > 0");
    if (!(tau > 0.0)) throw ValidationError("tau must be > 0");
    if (!(sample_period > 0.0)) throw ValidationError("sample_period must be > 0");
    if (tau < 2.0 * sample_period)
        throw ValidationError("tau must be >= 2*sample_period");
    // Tolerate tau/h sitting a few ulps above an integer so tau = 0.5, h = 0.01
    // yields 50 intervals, not 51.
    const auto intervals =
        static_cast<std::size_t>(std::ceil(tau / sample_period - 1e-9));
    window_len_ = intervals + 1;
    tau_eff_ = static_cast<double>(intervals) * sample_period;
    ys_.assign(window_len_, 0.0);
    us_.assign(window_len_, 0.0);
}

double UltraLocalModel::estimate() const {
    if (warming_up()) throw WarmingUp();
    return estimate_f(alpha_, tau_eff_, h_, ys_, us_);
}

double UltraLocalModel::control_step(double y, double y_ref, double y_ref_rate) {
    std::memmove(ys_.data(), ys_.data() + 1, (window_len_ - 1) * sizeof(double));
    std::memmove(us_.data(), us_.data() + 1, (window_len_ - 1) * sizeof(double));
    ys_.back() = y;
    us_.back() = 0.0;  // placeholder; the endpoint weight is zero regardless
    if (count_ < window_len_) ++count_;

    double u;
    if (warming_up()) {
        u = (warm_up_ == WarmUpPolicy::zero) ? 0.0 : last_u_;
    } else {
        const double f_est = estimate_f(alpha_, tau_eff_, h_, ys_, us_);
        u = ip_control(alpha_, kp_, f_est, y - y_ref, y_ref_rate);
    }
    us_.back() = u;
    last_u_ = u;
    return u;
}

}  // namespace lfcsim
