#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

namespace kottler::numerics {

struct StepControl {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double safety = 0.9;
  double min_factor = 0.2;
  double max_factor = 5.0;
  // PI exponents for a fifth-order solution with fourth-order error estimate.
  double alpha = 0.7 / 5.0;
  double beta = 0.4 / 5.0;
  std::size_t max_steps = 1'000'000;
};

struct StepStatistics {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t evaluations = 0;
};

enum class AdvanceStatus { ok, step_underflow, step_budget };

/// Dormand-Prince 5(4) with a PI step-size controller. State is a fixed-size
/// array; `rhs(t, y)` returns dy/dt.
template <std::size_t N>
class DormandPrince {
 public:
  using State = std::array<double, N>;

  explicit DormandPrince(StepControl control = {}) : control_(control) {}

  /// Advances (t, y) to exactly t_end. `h` carries the step size between calls.
  template <class Rhs>
  AdvanceStatus advance(Rhs&& rhs, double& t, State& y, double t_end, double& h) {
    if (h <= 0.0) h = std::min(1e-3, t_end - t);
    State k1 = rhs(t, y);
    ++stats_.evaluations;
    std::size_t steps = 0;
    while (t < t_end) {
      if (++steps > control_.max_steps) return AdvanceStatus::step_budget;
      bool last = false;
      double step = h;
      if (t + step >= t_end) {
        step = t_end - t;
        last = true;
      }
      const double h_min = 1e-14 * std::max(1.0, std::abs(t));
      if (step < h_min && !last) return AdvanceStatus::step_underflow;

      State y_new;
      State err;
      State k7;
      attempt(rhs, t, y, k1, step, y_new, err, k7);

      double norm = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double scale =
            control_.abs_tol + control_.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        const double e = err[i] / scale;
        norm += e * e;
      }
      norm = std::sqrt(norm / static_cast<double>(N));

      if (norm <= 1.0) {
        t = last ? t_end : t + step;
        y = y_new;
        k1 = k7;
        ++stats_.accepted;
        const double e = std::max(norm, 1e-10);
        double factor = control_.safety * std::pow(e, -control_.alpha) *
                        std::pow(previous_error_, control_.beta);
        factor = std::clamp(factor, control_.min_factor, control_.max_factor);
        if (rejected_last_) factor = std::min(factor, 1.0);
        previous_error_ = e;
        rejected_last_ = false;
        // Keep the controller's step when the last step was clipped to t_end.
        h = last ? std::max(h, step * factor) : step * factor;
      } else {
        ++stats_.rejected;
        const double factor =
            std::max(control_.min_factor, control_.safety * std::pow(norm, -control_.alpha));
        h = step * factor;
        rejected_last_ = true;
      }
    }
    return AdvanceStatus::ok;
  }

  const StepStatistics& statistics() const { return stats_; }

 private:
  template <class Rhs>
  void attempt(Rhs& rhs, double t, const State& y, const State& k1, double h, State& y_new,
               State& err, State& k7) {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    State tmp;
    auto stage = [&](auto&&... terms) {
      for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (... + (terms.first * terms.second[i]));
      return tmp;
    };
    using P = std::pair<double, const State&>;
    const State k2 = rhs(t + c2 * h, stage(P{a21, k1}));
    const State k3 = rhs(t + c3 * h, stage(P{a31, k1}, P{a32, k2}));
    const State k4 = rhs(t + c4 * h, stage(P{a41, k1}, P{a42, k2}, P{a43, k3}));
    const State k5 = rhs(t + c5 * h, stage(P{a51, k1}, P{a52, k2}, P{a53, k3}, P{a54, k4}));
    const State k6 =
        rhs(t + h, stage(P{a61, k1}, P{a62, k2}, P{a63, k3}, P{a64, k4}, P{a65, k5}));
    for (std::size_t i = 0; i < N; ++i) {
      y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    }
    k7 = rhs(t + h, y_new);
    for (std::size_t i = 0; i < N; ++i) {
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    }
    stats_.evaluations += 6;
  }

  StepControl control_;
  StepStatistics stats_;
  double previous_error_ = 1e-4;
  bool rejected_last_ = false;
};

}  // namespace kottler::numerics
